// pfaffian.cpp — finite Pfaffians and a determinant helper.
#include "rwre/pfaffian.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rwre {

cplx pfaffian(CMat A) {
    const size_t n = A.size();
    if (n % 2) throw std::invalid_argument("pfaffian: dimension must be even");
    if (n == 0) return 1.0;
    // Rebuild the lower triangle from the upper one so skewness is exact.
    for (size_t i = 0; i < n; ++i) {
        A[i][i] = 0.0;
        for (size_t j = i + 1; j < n; ++j) A[j][i] = -A[i][j];
    }
    cplx pf = 1.0;
    for (size_t k = 0; k + 1 < n; k += 2) {
        // Pivot: largest |A[i][k]| among i > k.
        size_t p = k + 1;
        double best = std::abs(A[k + 1][k]);
        for (size_t i = k + 2; i < n; ++i)
            if (std::abs(A[i][k]) > best) { best = std::abs(A[i][k]); p = i; }
        if (best == 0.0) return 0.0;
        if (p != k + 1) {
            std::swap(A[p], A[k + 1]);
            for (size_t j = 0; j < n; ++j) std::swap(A[j][p], A[j][k + 1]);
            pf = -pf;   // congruence by a transposition has determinant -1
        }
        pf *= A[k][k + 1];
        const cplx piv = A[k + 1][k];
        for (size_t i = k + 2; i < n; ++i) {
            if (A[i][k] == cplx(0.0)) continue;
            const cplx f = A[i][k] / piv;
            for (size_t j = k; j < n; ++j) A[i][j] -= f * A[k + 1][j];
            for (size_t j = k; j < n; ++j) A[j][i] -= f * A[j][k + 1];
        }
    }
    return pf;
}

cplx pfaffian_naive(const CMat& A) {
    const size_t n = A.size();
    if (n % 2) throw std::invalid_argument("pfaffian_naive: dimension must be even");
    std::vector<size_t> live(n);
    for (size_t i = 0; i < n; ++i) live[i] = i;
    auto rec = [&](auto&& self, std::vector<size_t>& idx) -> cplx {
        if (idx.empty()) return 1.0;
        cplx sum = 0.0;
        const size_t a = idx[0];
        double sign = 1.0;
        for (size_t j = 1; j < idx.size(); ++j, sign = -sign) {
            const size_t b = idx[j];
            std::vector<size_t> rest;
            rest.reserve(idx.size() - 2);
            for (size_t m = 1; m < idx.size(); ++m)
                if (m != j) rest.push_back(idx[m]);
            sum += sign * A[a][b] * self(self, rest);
        }
        return sum;
    };
    return rec(rec, live);
}

cplx cdet(CMat A) {
    const size_t n = A.size();
    cplx det = 1.0;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        for (size_t i = c + 1; i < n; ++i)
            if (std::abs(A[i][c]) > std::abs(A[p][c])) p = i;
        if (A[p][c] == cplx(0.0)) return 0.0;
        if (p != c) { std::swap(A[p], A[c]); det = -det; }
        det *= A[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            const cplx f = A[i][c] / A[c][c];
            if (f == cplx(0.0)) continue;
            for (size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
        }
    }
    return det;
}

} // namespace rwre

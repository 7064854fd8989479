// rational.hpp
// Exact rational scalars and fraction-free (Bareiss) Gaussian elimination:
// rank, linear solve with infeasibility detection. Used by the polynomial
// decomposition suite and the exact cluster-chain oracle.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>
#include <boost/multiprecision/cpp_int.hpp>

namespace rwre {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

// Exact rational Pochhammer (a)_k.
inline Rat rat_pochhammer(const Rat& a, int k) {
    Rat p = 1;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

inline Rat rat_binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rat p = 1;
    for (int i = 0; i < k; ++i) p = p * (n - i) / (i + 1);
    return p;
}

struct Echelon {
    RatMat M;                          // row-echelon form
    std::vector<size_t> pivot_cols;    // one per nonzero row, ascending
    size_t rank = 0;
};

// Fraction-free (Bareiss) forward elimination with row pivoting.
// `stop_col` limits the pivot search (use it to exclude an augmented column).
inline Echelon bareiss_echelon(RatMat M, size_t stop_col) {
    const size_t rows = M.size();
    const size_t cols = rows ? M[0].size() : 0;
    Echelon e;
    Rat prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < stop_col && c < cols && r < rows; ++c) {
        // Pivot: first row with a nonzero entry in column c.
        size_t p = r;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(M[p], M[r]);
        const Rat pivot = M[r][c];
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                M[i][j] = (M[i][j] * pivot - M[i][c] * M[r][j]) / prev;
            M[i][c] = 0;
        }
        prev = pivot;
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rank = r;
    e.M = std::move(M);
    return e;
}

inline size_t rat_rank(const RatMat& A) {
    if (A.empty()) return 0;
    return bareiss_echelon(A, A[0].size()).rank;
}

// Solve A x = b exactly; returns a particular solution (free variables 0),
// or nullopt when the system is inconsistent.
inline std::optional<RatVec> rat_solve(const RatMat& A, const RatVec& b) {
    const size_t rows = A.size();
    if (rows == 0) return RatVec{};
    const size_t n = A[0].size();
    if (b.size() != rows) throw std::invalid_argument("rat_solve: size mismatch");
    RatMat M(rows, RatVec(n + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < n; ++j) M[i][j] = A[i][j];
        M[i][n] = b[i];
    }
    Echelon e = bareiss_echelon(std::move(M), n);
    // Inconsistent iff some zero row of the A-part has nonzero augment.
    for (size_t i = e.rank; i < rows; ++i)
        if (e.M[i][n] != 0) return std::nullopt;
    RatVec x(n, 0);
    for (size_t ri = e.rank; ri-- > 0;) {
        const size_t pc = e.pivot_cols[ri];
        Rat s = e.M[ri][n];
        for (size_t j = pc + 1; j < n; ++j)
            if (e.M[ri][j] != 0) s -= e.M[ri][j] * x[j];
        x[pc] = s / e.M[ri][pc];
    }
    return x;
}

} // namespace rwre

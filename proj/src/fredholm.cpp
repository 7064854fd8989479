// fredholm.cpp — Fredholm Pfaffian / determinant evaluation.
#include "rwre/fredholm.hpp"

#include <cmath>
#include <stdexcept>
#include "rwre/pfaffian.hpp"
#include "rwre/specfun.hpp"

namespace rwre {

namespace {

// Scalar kernel factor on iR (T = even horizon, exponent T/2):
//   f(z) = (z^2/(z^2-mu^2))^{T/2} * z / ((z^2-mu^2)(z^2-eta^2)).
// At z = iy this is i * y (y^2/(y^2+mu^2))^{T/2} / ((y^2+mu^2)(y^2+eta^2)),
// computed via exp(-T/2 * log1p(mu^2/y^2)) for stability at large T.
cplx kernel_factor(double y, double mu, double eta, int64_t T) {
    const double ratio = std::exp(-0.5 * static_cast<double>(T) *
                                  std::log1p(mu * mu / (y * y)));
    const double mag = y * ratio / ((y * y + mu * mu) * (y * y + eta * eta));
    return cplx(0.0, mag);
}

double auto_scale_half(const ModelParams& p, int64_t T) {
    return p.mu * std::max(1.0, std::sqrt(0.5 * static_cast<double>(T)));
}

// Schur's Pfaffian identity Pf[(x_i-x_j)/(x_i+x_j)] = prod_{i<j}(x_i-x_j)/(x_i+x_j)
// collapses the 2k x 2k Pfaffian over the paired nodes u = (z_a-1/2, -z_a-1/2)
// to prod_a (-2 z_a) times the pairwise cross factor
//   R(a,b) = (a-b)^2 (a+b)^2 / (((a-b)^2 - 1)((a+b)^2 - 1)),
// turning each series term into a plain product quadrature.
cplx cross_R(cplx a, cplx b) {
    const cplx d2 = (a - b) * (a - b), s2 = (a + b) * (a + b);
    return d2 * s2 / ((d2 - 1.0) * (s2 - 1.0));
}

// Raw k-dimensional term integral at n nodes per dimension.
cplx series_term_raw(const ModelParams& p, int64_t T, int k, int n, double scale) {
    if (n % 2) ++n;
    const ContourNodes c = line_contour(scale, n);
    const size_t nn = c.z.size();
    std::vector<cplx> wv(nn);
    for (size_t i = 0; i < nn; ++i)
        wv[i] = c.w[i] * kernel_factor(c.z[i].imag(), p.mu, p.eta, T) * (-2.0 * c.z[i]);
    if (k == 1) {
        cplx s = 0.0;
        for (const cplx& v : wv) s += v;
        return s;
    }
    std::vector<cplx> Rt(nn * nn);
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < static_cast<int64_t>(nn); ++i)
        for (size_t j = 0; j < nn; ++j)
            Rt[static_cast<size_t>(i) * nn + j] = cross_R(c.z[static_cast<size_t>(i)], c.z[j]);
    // Conjugate-pair node symmetry: mirrored outer half contributes the
    // conjugate, so run the outer index over half the grid and take 2 Re.
    const size_t half = nn / 2;
    std::vector<cplx> outer(half);
#pragma omp parallel for schedule(static)
    for (int64_t i0 = 0; i0 < static_cast<int64_t>(half); ++i0) {
        std::vector<size_t> idx(static_cast<size_t>(k));
        idx[0] = static_cast<size_t>(i0);
        cplx total = 0.0;
        auto rec = [&](auto&& self, int d, cplx acc) -> void {
            if (d == k) {
                total += acc;
                return;
            }
            for (size_t i = 0; i < nn; ++i) {
                cplx w = acc * wv[i];
                for (int j = 0; j < d; ++j) w *= Rt[idx[static_cast<size_t>(j)] * nn + i];
                idx[static_cast<size_t>(d)] = i;
                self(self, d + 1, w);
            }
        };
        rec(rec, 1, wv[static_cast<size_t>(i0)]);
        outer[static_cast<size_t>(i0)] = total;
    }
    cplx s = 0.0;
    for (const cplx& v : outer) s += v;
    return cplx(2.0 * s.real(), 0.0);
}

} // namespace

cplx generating_series(const std::vector<double>& moments, double nu, cplx zeta) {
    cplx sum = 1.0;
    cplx pow = 1.0;
    double kfact = 1.0, poch = 1.0;
    for (size_t k = 1; k <= moments.size(); ++k) {
        pow *= -zeta;
        kfact *= static_cast<double>(k);
        poch *= nu + static_cast<double>(k - 1);
        sum += pow * moments[k - 1] / (kfact * poch);
    }
    return sum;
}

std::vector<cplx> fredholm_pfaffian_series_integrals(const ModelParams& p, int64_t T,
                                                     int k_max, int nodes_per_dim) {
    p.validate();
    if (T < 2 || T % 2)
        throw std::invalid_argument("fredholm_pfaffian_series_integrals: T must be positive even");
    if (k_max < 1 || k_max > 4)
        throw std::invalid_argument("fredholm_pfaffian_series_integrals: k_max must be 1..4");
    const double scale = auto_scale_half(p, T);
    std::vector<cplx> out;
    for (int k = 1; k <= k_max; ++k) {
        const int n0 = nodes_per_dim > 0 ? nodes_per_dim
                                         : (k == 1 ? 512 : (k == 2 ? 128 : (k == 3 ? 48 : 24)));
        // Node-doubling ladder with a Richardson tableau: the cross factor R
        // leaves the same O(h^2)-led tail error as the moment cross factor.
        std::vector<cplx> row{series_term_raw(p, T, k, n0, scale)};
        for (int r = 0, n = n0; r < 2; ++r) {
            n *= 2;
            std::vector<cplx> next{series_term_raw(p, T, k, n, scale)};
            for (size_t i = 0; i < row.size(); ++i) {
                const double f = std::pow(2.0, static_cast<double>(i + 2));
                next.push_back((f * next[i] - row[i]) / (f - 1.0));
            }
            row = std::move(next);
        }
        out.push_back(row.back());
    }
    return out;
}

PfSeriesResult fredholm_pfaffian_series(const ModelParams& p, int64_t T, cplx zeta,
                                        int k_max, int nodes_per_dim) {
    const std::vector<cplx> ints = fredholm_pfaffian_series_integrals(p, T, k_max, nodes_per_dim);
    PfSeriesResult out;
    out.value = 1.0;
    for (int k = 1; k <= k_max; ++k) {
        cplx pref = 1.0;
        for (int j = 1; j <= k; ++j) pref *= -zeta / static_cast<double>(j);
        out.terms.push_back(pref * ints[static_cast<size_t>(k - 1)]);
        out.value += out.terms.back();
    }
    return out;
}

cplx fredholm_pfaffian_discretized(const ModelParams& p, int64_t T, cplx zeta,
                                   int nodes, double scale) {
    p.validate();
    if (T < 2 || T % 2) throw std::invalid_argument("fredholm_pfaffian_discretized: T must be positive even");
    if (nodes % 2) ++nodes;
    if (scale <= 0.0) scale = auto_scale_half(p, T);
    const ContourNodes c = line_contour(scale, nodes);
    const size_t N = c.z.size();

    // Pair components: u_{i,1} = -z_i - 1/2, u_{i,2} = z_i - 1/2, so that the
    // diagonal pair entry is A = 2 z_i and Pf(J + zeta K) matches the
    // generating series with the stated sign.
    std::vector<cplx> u(2 * N), cfac(N);
    for (size_t i = 0; i < N; ++i) {
        u[2 * i] = -c.z[i] - 0.5;
        u[2 * i + 1] = c.z[i] - 0.5;
        // Symmetric square-root splitting of the scalar factor; weights on
        // iR are real positive so sqrt(w_i w_j) = sqrt(w_i) sqrt(w_j).
        cfac[i] = std::sqrt(kernel_factor(c.z[i].imag(), p.mu, p.eta, T) *
                            c.w[i].real());
    }
    CMat M(2 * N, std::vector<cplx>(2 * N, cplx(0.0)));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const size_t pq = 2 * i + static_cast<size_t>(a);
                    const size_t qr = 2 * j + static_cast<size_t>(b);
                    if (pq >= qr) continue;
                    M[pq][qr] = zeta * cfac[i] * cfac[j] *
                                (u[pq] - u[qr]) / (u[pq] + u[qr]);
                }
    // J + M
    for (size_t i = 0; i < N; ++i) M[2 * i][2 * i + 1] += 1.0;
    return pfaffian(std::move(M));
}

cplx fredholm_determinant_fullspace(const FullParams& p, int64_t t, int64_t x,
                                    cplx zeta, int nodes, double eta_hat,
                                    double scale) {
    p.validate();
    if (((t + x) % 2 + 2) % 2 != 0)
        throw std::invalid_argument("fredholm_determinant_fullspace: t + x must be even");
    const double ab = p.alpha + p.beta;
    if (eta_hat == 0.0) eta_hat = -0.5 * ab;
    if (!(eta_hat > -ab) || !(eta_hat < 0.0))
        throw std::invalid_argument("fredholm_determinant_fullspace: eta_hat outside (-alpha-beta, 0)");
    if (scale <= 0.0)
        scale = std::max(1.0, std::sqrt(2.0 * static_cast<double>(t) * p.alpha * p.beta));
    if (nodes % 2) ++nodes;

    const ContourNodes base = line_contour(scale, nodes);
    const size_t N = base.z.size();
    std::vector<cplx> z(N), fv(N);
    for (size_t i = 0; i < N; ++i) {
        z[i] = base.z[i] + eta_hat;
        // f_{t,x}(z) = (alpha+z)^t z^{-(t+x)/2-1} (z+alpha+beta)^{(x-t)/2-1},
        // integer exponents on the parity set; evaluated in log space.
        const double p1 = -0.5 * static_cast<double>(t + x) - 1.0;
        const double p2 = 0.5 * static_cast<double>(x - t) - 1.0;
        fv[i] = std::exp(static_cast<double>(t) * std::log(p.alpha + z[i]) +
                         p1 * std::log(z[i]) + p2 * std::log(z[i] + ab));
    }
    CMat D(N, std::vector<cplx>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            D[i][j] = zeta * base.w[i].real() * fv[i] / (z[i] - z[j] - 1.0);
            if (i == j) D[i][j] += 1.0;
        }
    return cdet(std::move(D));
}

} // namespace rwre

// mellin.cpp — Mellin–Barnes evaluation of the Hankel transform.
#include "rwre/mellin.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>
#include "rwre/specfun.hpp"

namespace rwre {

namespace {

constexpr double kPi = 3.141592653589793238462643;

// One (z, w) node pair with the full single-index factor (weights included).
struct Pair {
    size_t a = 0, b = 0;
    cplx P;
};

} // namespace

MellinResult mellin_barnes_transform(const ModelParams& p, int64_t x, int64_t t,
                                     cplx zeta, int ell_max,
                                     int nodes_per_ray, int nodes_circle,
                                     double wedge_R) {
    p.validate();
    if (x < 1 || x % 2 == 0) throw std::invalid_argument("mellin_barnes_transform: x must be a positive odd integer");
    if (t < 2 || t % 2) throw std::invalid_argument("mellin_barnes_transform: t must be a positive even integer");
    if (ell_max < 1 || ell_max > 3) throw std::invalid_argument("mellin_barnes_transform: ell_max must be 1..3");
    if (zeta.imag() == 0.0 && zeta.real() < 0.0)
        throw std::invalid_argument("mellin_barnes_transform: zeta must avoid the negative real axis");

    MellinResult out;
    out.value = 1.0;
    if (zeta == cplx(0.0)) {
        out.term_mags.assign(static_cast<size_t>(ell_max), 0.0);
        return out;
    }

    const double mu = p.mu, eta = p.eta;
    // w circle around mu: radius < 1/4, excluding -mu and -eta; its right
    // edge mu + r_w stays 0.5 - r_w left of the wedge apex mu + 1/2, which
    // keeps sin(pi (w - z)) zero-free on the contours.
    const double r_w = std::min({0.2, 0.9 * 2.0 * mu, 0.9 * (mu + eta)});
    const ContourNodes wc = circle_contour(Circle{cplx(mu, 0.0), r_w}, nodes_circle);
    const ContourNodes zc = wedge_contour(mu + 0.5, kPi / 3.0, wedge_R, nodes_per_ray);

    const size_t Nz = zc.z.size(), Nw = wc.z.size();
    const double m1 = 0.5 * static_cast<double>(x - 1);
    const double m2 = 0.5 * static_cast<double>(t);
    const cplx lzeta = std::log(zeta);

    // Per-node log-gamma caches.
    std::vector<cplx> Lz(Nz), Lz_pm(Nz), Lz_mm(Nz), Lz_eta(Nz);
    for (size_t a = 0; a < Nz; ++a) {
        const cplx z = zc.z[a];
        Lz[a] = log_gamma(z);
        Lz_pm[a] = log_gamma(z + mu);
        Lz_mm[a] = log_gamma(z - mu);
        Lz_eta[a] = log_gamma(z + eta);
    }
    std::vector<cplx> Lw(Nw), Lw_pm(Nw), Lw_mm(Nw), Lw_eta(Nw), Lw_2w(Nw);
    for (size_t b = 0; b < Nw; ++b) {
        const cplx w = wc.z[b];
        Lw[b] = log_gamma(w);
        Lw_pm[b] = log_gamma(w + mu);
        Lw_mm[b] = log_gamma(w - mu);
        Lw_eta[b] = log_gamma(w + eta);
        Lw_2w[b] = log_gamma(2.0 * w);
    }

    // Single-index factors P[a][b] (log-assembled; integer powers of gamma
    // ratios exponentiate exactly regardless of log branches).
    std::vector<std::vector<cplx>> P(Nz, std::vector<cplx>(Nw));
    std::vector<std::vector<cplx>> czw(Nz, std::vector<cplx>(Nw));   // Gamma(z_a + w_b)
    double maxP = 0.0;
    for (size_t a = 0; a < Nz; ++a) {
        const cplx z = zc.z[a];
        const cplx base_z = -Lz_eta[a] - Lz_pm[a] - Lz_mm[a] +
                            m1 * (Lz_mm[a] - Lz_pm[a]) +
                            m2 * (2.0 * Lz[a] - Lz_mm[a] - Lz_pm[a]);
        for (size_t b = 0; b < Nw; ++b) {
            const cplx w = wc.z[b];
            const cplx lg_zw = log_gamma(z + w);
            czw[a][b] = std::exp(lg_zw);
            cplx lg = std::log(cplx(kPi)) - std::log(std::sin(kPi * (w - z))) +
                      (z - w) * lzeta + lg_zw - Lw_2w[b] +
                      Lw_eta[b] + Lw_pm[b] + Lw_mm[b] + base_z +
                      m1 * (Lw_pm[b] - Lw_mm[b]) +
                      m2 * (Lw_mm[b] + Lw_pm[b] - 2.0 * Lw[b]);
            cplx val = 0.0;
            if (lg.real() > -700.0) val = std::exp(lg) * zc.w[a] * wc.w[b];
            P[a][b] = val;
            maxP = std::max(maxP, std::abs(val));
        }
    }

    // Prune pairs with negligible factor; the wedge tail contributes nothing.
    std::vector<Pair> pairs;
    pairs.reserve(Nz * Nw);
    const double cut = 1e-15 * maxP;
    for (size_t a = 0; a < Nz; ++a)
        for (size_t b = 0; b < Nw; ++b)
            if (std::abs(P[a][b]) > cut) pairs.push_back({a, b, P[a][b]});
    const size_t Np = pairs.size();

    // Cauchy entries and the symmetric gamma tables for the cross factor.
    std::vector<std::vector<cplx>> R(Nz, std::vector<cplx>(Nw));
    for (size_t a = 0; a < Nz; ++a)
        for (size_t b = 0; b < Nw; ++b)
            R[a][b] = 1.0 / (zc.z[a] - wc.z[b]);
    std::vector<std::vector<cplx>> czz, cww;
    if (ell_max >= 2) {
        czz.assign(Nz, std::vector<cplx>(Nz));
        for (size_t a = 0; a < Nz; ++a)
            for (size_t a2 = a; a2 < Nz; ++a2)
                czz[a][a2] = czz[a2][a] = gamma_fn(zc.z[a] + zc.z[a2]);
        cww.assign(Nw, std::vector<cplx>(Nw));
        for (size_t b = 0; b < Nw; ++b)
            for (size_t b2 = b; b2 < Nw; ++b2)
                cww[b][b2] = cww[b2][b] = gamma_fn(wc.z[b] + wc.z[b2]);
    }
    auto cross = [&](const Pair& u, const Pair& v) -> cplx {
        return czw[u.a][v.b] * czw[v.a][u.b] / (cww[u.b][v.b] * czz[u.a][v.a]);
    };

    // ell = 1: sum_p P_p / (z_p - w_p).
    {
        cplx term = 0.0;
        for (const Pair& q : pairs) term += q.P * R[q.a][q.b];
        out.term_mags.push_back(std::abs(term));
        out.value += term;
    }

    if (ell_max >= 2) {
        const int64_t np = static_cast<int64_t>(Np);
        std::vector<cplx> partial(Np, cplx(0.0));
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < np; ++i) {
            const Pair& u = pairs[static_cast<size_t>(i)];
            cplx acc = 0.0;
            for (size_t j = 0; j < Np; ++j) {
                const Pair& v = pairs[j];
                const cplx det2 = R[u.a][u.b] * R[v.a][v.b] - R[u.a][v.b] * R[v.a][u.b];
                acc += u.P * v.P * cross(u, v) * det2;
            }
            partial[static_cast<size_t>(i)] = acc;
        }
        cplx term = 0.0;
        for (const cplx& v : partial) term += v;
        term *= 0.5;
        out.term_mags.push_back(std::abs(term));
        out.value += term;
    }

    if (ell_max >= 3) {
        if (Np > 900)
            throw std::invalid_argument("mellin_barnes_transform: ell = 3 needs reduced node counts");
        const int64_t np = static_cast<int64_t>(Np);
        std::vector<cplx> partial(Np, cplx(0.0));
#pragma omp parallel for schedule(dynamic)
        for (int64_t i = 0; i < np; ++i) {
            const Pair& u = pairs[static_cast<size_t>(i)];
            cplx acc = 0.0;
            for (size_t j = 0; j < Np; ++j) {
                const Pair& v = pairs[j];
                const cplx pre = u.P * v.P * cross(u, v);
                for (size_t m = 0; m < Np; ++m) {
                    const Pair& s = pairs[m];
                    const cplx det3 =
                        R[u.a][u.b] * (R[v.a][v.b] * R[s.a][s.b] - R[v.a][s.b] * R[s.a][v.b]) -
                        R[u.a][v.b] * (R[v.a][u.b] * R[s.a][s.b] - R[v.a][s.b] * R[s.a][u.b]) +
                        R[u.a][s.b] * (R[v.a][u.b] * R[s.a][v.b] - R[v.a][v.b] * R[s.a][u.b]);
                    acc += pre * s.P * cross(u, s) * cross(v, s) * det3;
                }
            }
            partial[static_cast<size_t>(i)] = acc;
        }
        cplx term = 0.0;
        for (const cplx& v : partial) term += v;
        term /= 6.0;
        out.term_mags.push_back(std::abs(term));
        out.value += term;
    }

    out.truncation_proxy = out.term_mags.back() / std::max(1.0, std::abs(out.value));
    return out;
}

} // namespace rwre

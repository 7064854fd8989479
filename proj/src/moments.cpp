// moments.cpp — contour quadrature for the annealed moment formulas.
#include "rwre/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#ifdef _OPENMP
#include <omp.h>
#endif
#include "rwre/specfun.hpp"

namespace rwre {

namespace {

// ---- integrand factors ----

// Combined half-space factor: the product
//   (z^2/(z^2-mu^2))^{t/2+1} ((z-mu)/(z+mu))^{(x-1)/2} / (z (z+eta))
// equals z^{t+1} (z-mu)^{(x-t-3)/2} (z+mu)^{-(x+t+1)/2} / (z+eta),
// with both exponents integers on the parity set t + x odd.
cplx g_half(cplx z, double mu, double eta, int64_t t, int64_t x) {
    const double e1 = 0.5 * static_cast<double>(x - t - 3);
    const double e2 = -0.5 * static_cast<double>(x + t + 1);
    const cplx lg = static_cast<double>(t + 1) * std::log(z) +
                    e1 * std::log(z - mu) + e2 * std::log(z + mu) -
                    std::log(z + eta);
    return std::exp(lg);
}

// Full-space factor: ((a+z)^2/(z(z+a+b)))^{t/2} ((z+a+b)/z)^{x/2+1} /
// (z+a+b)^2 = (a+z)^t z^{-(t+x)/2-1} (z+a+b)^{(x-t)/2-1}, integer exponents
// when t + x is even.
cplx g_full(cplx z, double alpha, double beta, int64_t t, int64_t x) {
    const double ab = alpha + beta;
    const double p1 = -0.5 * static_cast<double>(t + x) - 1.0;
    const double p2 = 0.5 * static_cast<double>(x - t) - 1.0;
    const cplx lg = static_cast<double>(t) * std::log(alpha + z) +
                    p1 * std::log(z) + p2 * std::log(z + ab);
    return std::exp(lg);
}

// Boundary-condition factor of the r leading variables in the vanishing
// integral: (z^2/(z^2-mu^2))^{t/2} / (z (z^2-mu^2)(z+eta)), t even.
cplx g_boundary(cplx z, double mu, double eta, int64_t t) {
    const double e = -0.5 * static_cast<double>(t) - 1.0;
    const cplx lg = static_cast<double>(t - 1) * std::log(z) +
                    e * (std::log(z - mu) + std::log(z + mu)) -
                    std::log(z + eta);
    return std::exp(lg);
}

cplx q_half(cplx a, cplx b) {
    return (a - b) / (a - b - 1.0) * (a + b) / (a + b + 1.0);
}

cplx q_full(cplx a, cplx b) { return (a - b) / (a - b - 1.0); }

// ---- generic product quadrature ----

// Sum over the product grid of k contours with per-variable weights gv and a
// pairwise cross factor. OpenMP-parallel over the outermost index with a
// fixed-order reduction, so the result is thread-count independent.
template <typename Cross>
cplx product_quad(const std::vector<ContourNodes>& cs,
                  const std::vector<std::vector<cplx>>& gv, Cross cross) {
    const int k = static_cast<int>(cs.size());
    const int64_t n0 = static_cast<int64_t>(cs[0].z.size());
    // Tabulate the cross factor per ordered dimension pair; the inner loops
    // then reduce to table lookups instead of complex divisions.
    std::vector<std::vector<cplx>> qt(static_cast<size_t>(k * k));
    std::vector<std::vector<cplx>> wgv(static_cast<size_t>(k));
    for (int d = 0; d < k; ++d) {
        const size_t nd = cs[static_cast<size_t>(d)].z.size();
        wgv[static_cast<size_t>(d)].resize(nd);
        for (size_t i = 0; i < nd; ++i)
            wgv[static_cast<size_t>(d)][i] =
                cs[static_cast<size_t>(d)].w[i] * gv[static_cast<size_t>(d)][i];
        for (int j = 0; j < d; ++j) {
            const size_t nj = cs[static_cast<size_t>(j)].z.size();
            std::vector<cplx>& tab = qt[static_cast<size_t>(j * k + d)];
            tab.resize(nj * nd);
#pragma omp parallel for schedule(static)
            for (int64_t a = 0; a < static_cast<int64_t>(nj); ++a)
                for (size_t b = 0; b < nd; ++b)
                    tab[static_cast<size_t>(a) * nd + b] =
                        cross(cs[static_cast<size_t>(j)].z[static_cast<size_t>(a)],
                              cs[static_cast<size_t>(d)].z[b]);
        }
    }
    std::vector<cplx> outer(static_cast<size_t>(n0));
#pragma omp parallel for schedule(static)
    for (int64_t i0 = 0; i0 < n0; ++i0) {
        std::vector<size_t> idx(static_cast<size_t>(k));
        cplx total = 0.0;
        idx[0] = static_cast<size_t>(i0);
        // Odometer over the remaining dimensions via explicit recursion.
        auto rec = [&](auto&& self, int d, cplx acc) -> void {
            if (d == k) {
                total += acc;
                return;
            }
            const size_t n = cs[static_cast<size_t>(d)].z.size();
            for (size_t i = 0; i < n; ++i) {
                cplx w = acc * wgv[static_cast<size_t>(d)][i];
                for (int j = 0; j < d; ++j)
                    w *= qt[static_cast<size_t>(j * k + d)]
                           [idx[static_cast<size_t>(j)] * n + i];
                idx[static_cast<size_t>(d)] = i;
                self(self, d + 1, w);
            }
        };
        rec(rec, 1, wgv[0][static_cast<size_t>(i0)]);
        outer[static_cast<size_t>(i0)] = total;
    }
    cplx sum = 0.0;
    for (const cplx& v : outer) sum += v;
    return sum;
}

int default_nodes(int k, bool circle) {
    if (circle) return k <= 2 ? 128 : (k == 3 ? 96 : 48);
    return k == 1 ? 256 : (k == 2 ? 128 : 64);
}

// Refinement driver: evaluate, double nodes, compare. For the tan-mapped line
// the coupled tails of the cross factor leave an O(h^2) + O(h^3) + ... error,
// so the node-doubling ladder feeds a Richardson tableau that strips one power
// per column; circle contours converge spectrally and skip the tableau.
template <typename Eval>
IntegralResult refine(Eval eval, int n0, const QuadCfg& cfg, double prefactor,
                      bool richardson = false) {
    IntegralResult res;
    std::vector<cplx> row{eval(n0)};
    cplx prev = row[0];
    int n = n0;
    for (int r = 0; r < cfg.max_refinements; ++r) {
        const int n2 = 2 * n;
        std::vector<cplx> next{eval(n2)};
        if (richardson) {
            for (size_t i = 0; i < row.size(); ++i) {
                const double f = std::pow(2.0, static_cast<double>(i + 2));
                next.push_back((f * next[i] - row[i]) / (f - 1.0));
            }
        }
        const cplx cur = next.back();
        res.last_delta = std::abs(cur - prev) * std::fabs(prefactor);
        const double denom = std::max(std::abs(cur) * std::fabs(prefactor), 1e-300);
        row = std::move(next);
        prev = cur;
        n = n2;
        if (res.last_delta / denom <= cfg.rel_tol || res.last_delta <= 1e-16) {
            res.converged = true;
            break;
        }
    }
    const cplx v = prefactor * prev;
    res.value = v.real();
    res.imag_residue = std::fabs(v.imag());
    res.nodes_per_dim = n;
    return res;
}

std::vector<ContourNodes> line_contours(int k, double scale, int n) {
    if (n % 2) ++n;   // even counts keep z = 0 off the node set
    std::vector<ContourNodes> cs;
    const ContourNodes c = line_contour(scale, n);
    for (int a = 0; a < k; ++a) cs.push_back(c);
    return cs;
}

// Node-doubling ladder with the same Richardson tableau as refine(), returning
// the raw complex estimate plus the final diagonal step for convergence tests.
struct LadderOut {
    cplx value = 0.0;
    double delta = 0.0;
    int nodes = 0;
    bool converged = false;
};

template <typename Eval>
LadderOut ladder(Eval eval, int n0, int max_refinements, double abs_tol) {
    LadderOut out;
    std::vector<cplx> row{eval(n0)};
    cplx prev = row[0];
    int n = n0;
    for (int r = 0; r < max_refinements; ++r) {
        const int n2 = 2 * n;
        std::vector<cplx> next{eval(n2)};
        for (size_t i = 0; i < row.size(); ++i) {
            const double f = std::pow(2.0, static_cast<double>(i + 2));
            next.push_back((f * next[i] - row[i]) / (f - 1.0));
        }
        const cplx cur = next.back();
        out.delta = std::abs(cur - prev);
        row = std::move(next);
        prev = cur;
        n = n2;
        if (out.delta <= abs_tol) {
            out.converged = true;
            break;
        }
    }
    out.value = prev;
    out.nodes = n;
    return out;
}

} // namespace

IntegralResult moment_integral_line(const ModelParams& p, int64_t t,
                                    std::vector<int64_t> xs, QuadCfg cfg,
                                    LinePairCache* cache) {
    p.validate();
    const int k = static_cast<int>(xs.size());
    if (k < 1 || k > 3) throw std::invalid_argument("moment_integral_line: k must be 1..3");
    for (int64_t x : xs) {
        if (x < 1) throw std::invalid_argument("moment_integral_line: x must be >= 1");
        if (((t + x) % 2 + 2) % 2 != 1)
            throw std::invalid_argument("moment_integral_line: t + x must be odd");
    }
    std::sort(xs.begin(), xs.end());
    // A wide tan-map scale dilutes the O(h^2) cross-tail error (it falls off
    // like 1/scale) without hurting the pole region once n >= 64.
    const double scale = cfg.line_scale > 0.0 ? cfg.line_scale : 1.5 * (p.mu + p.eta);
    const double pref = std::pow(-2.0, k) * pochhammer_real(p.mu + p.eta, k);

    if (k == 1) {
        const int n0 = cfg.nodes_per_dim > 0 ? cfg.nodes_per_dim : default_nodes(1, false);
        auto eval = [&](int n) {
            const std::vector<ContourNodes> cs = line_contours(1, scale, n);
            std::vector<std::vector<cplx>> gv(1);
            for (const cplx& z : cs[0].z)
                gv[0].push_back(g_half(z, p.mu, p.eta, t, xs[0]));
            return product_quad(cs, gv, q_half);
        };
        return refine(eval, n0, cfg, pref, /*richardson=*/true);
    }

    // ---- cluster-corrected quadrature for k >= 2 ----
    // The cross product splits as prod q = 1 + sum_{a<b}(q_ab - 1) + R. The
    // "1" part factorizes into machine-exact 1D integrals, each pair term is a
    // cheap 2D integral that can afford a fine grid (it carries the slowly
    // converging tail-ridge of q), and the remainder R involves products of
    // two or more (q-1) factors which decay off the ridge intersections, so a
    // coarse k-D grid suffices.
    std::map<int, ContourNodes> contour_cache;
    auto contour = [&](int n) -> const ContourNodes& {
        if (n % 2) ++n;
        auto it = contour_cache.find(n);
        if (it == contour_cache.end())
            it = contour_cache.emplace(n, line_contour(scale, n)).first;
        return it->second;
    };
    auto gvec = [&](const ContourNodes& c, int64_t x) {
        std::vector<cplx> g;
        g.reserve(c.z.size());
        for (const cplx& z : c.z) g.push_back(g_half(z, p.mu, p.eta, t, x));
        return g;
    };

    const ContourNodes& c1 = contour(1024);
    std::vector<cplx> P(static_cast<size_t>(k));
    for (int a = 0; a < k; ++a) {
        const std::vector<cplx> g = gvec(c1, xs[static_cast<size_t>(a)]);
        cplx s = 0.0;
        for (size_t i = 0; i < c1.z.size(); ++i) s += c1.w[i] * g[i];
        P[static_cast<size_t>(a)] = s;
    }
    cplx base = 1.0;
    for (const cplx& v : P) base *= v;
    const double atol = cfg.rel_tol * std::max(std::abs(base), 1e-8);

    IntegralResult res;
    res.converged = true;

    // ---- rank-2 kernel machinery ----
    // e(a,b) := q(a,b) - 1 has the exact partial-fraction forms
    //   e(a,b) = alpha(a)/(a - b - 1) - beta(a)/(a + b + 1)
    //          = gamma(b) [1/(a - b - 1) - 1/(a + b + 1)]
    // with alpha(a) = (2a-1)/(2a), beta(a) = (2a+1)/(2a) and
    // gamma(b) = (2b+1)/(2b+2), so every weighted sum of e over one variable
    // reduces to two Cauchy-kernel sums, and the fully coupled three-bond
    // inner sum collapses to a closed O(n^2) expression by partial fractions
    // (the degenerate node pairs -- equal or mirrored -- are summed directly).
    auto alpha = [](cplx z) { return (2.0 * z - 1.0) / (2.0 * z); };
    auto beta = [](cplx z) { return (2.0 * z + 1.0) / (2.0 * z); };
    // G-direction: GA(i) = sum_l u_l/(z_i - z_l - 1), GB(i) = -sum_l u_l/(z_i + z_l + 1),
    // giving sum_l u_l e(z_i, z_l) = alpha_i GA(i) + beta_i GB(i).
    auto cauchy_g = [](const ContourNodes& c, const std::vector<cplx>& u,
                       std::vector<cplx>& GA, std::vector<cplx>& GB,
                       size_t rows = 0) {
        const size_t nn = c.z.size();
        if (rows == 0) rows = nn;
        GA.resize(rows);
        GB.resize(rows);
#pragma omp parallel for schedule(static)
        for (int64_t i = 0; i < static_cast<int64_t>(rows); ++i) {
            const cplx zi = c.z[static_cast<size_t>(i)];
            cplx ga = 0.0, gb = 0.0;
            for (size_t l = 0; l < nn; ++l) {
                ga += u[l] / (zi - c.z[l] - 1.0);
                gb += u[l] / (zi + c.z[l] + 1.0);
            }
            GA[static_cast<size_t>(i)] = ga;
            GB[static_cast<size_t>(i)] = -gb;
        }
    };
    // H-direction: sum_i v_i e(z_i, z_l) = gamma_l (HA(l) - HB(l)) with
    // HA(l) = sum_i v_i/(z_i - z_l - 1), HB(l) = sum_i v_i/(z_i + z_l + 1).
    auto row_a = [](const ContourNodes& c, const std::vector<cplx>& v,
                    std::vector<cplx>& A) {
        const size_t nn = c.z.size();
        A.resize(nn);
#pragma omp parallel for schedule(static)
        for (int64_t l = 0; l < static_cast<int64_t>(nn); ++l) {
            const cplx zl = c.z[static_cast<size_t>(l)];
            cplx ha = 0.0, hb = 0.0;
            for (size_t i = 0; i < nn; ++i) {
                ha += v[i] / (c.z[i] - zl - 1.0);
                hb += v[i] / (c.z[i] + zl + 1.0);
            }
            A[static_cast<size_t>(l)] = (2.0 * zl + 1.0) / (2.0 * zl + 2.0) * (ha - hb);
        }
    };

    const int n_rem0 = cfg.nodes_per_dim > 0 ? cfg.nodes_per_dim : 96;
    const int n_pair0 = 1024;

    // Pair terms ride their own contour, 4x wider: the residual tail-ridge
    // error of (q - 1) falls off like 1/scale, and with n >= 512 the pole
    // neighbourhood is still over-resolved. Rows 1024..8192 under the
    // Richardson tableau land the pair integrals at ~1e-12 absolute.
    std::map<int, ContourNodes> wide_cache;
    auto contour_pair = [&](int n) -> const ContourNodes& {
        if (n % 2) ++n;
        auto it = wide_cache.find(n);
        if (it == wide_cache.end())
            it = wide_cache.emplace(n, line_contour(4.0 * scale, n)).first;
        return it->second;
    };

    std::map<std::pair<int64_t, int64_t>, cplx> pair_cache;
    cplx pair_sum = 0.0;
    double delta_sum = 0.0;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            const std::pair<int64_t, int64_t> key{xs[static_cast<size_t>(a)],
                                                  xs[static_cast<size_t>(b)]};
            auto it = pair_cache.find(key);
            if (it == pair_cache.end() && cache) {
                const std::array<int64_t, 3> ck{t, key.first, key.second};
                auto hit = cache->entries.find(ck);
                if (hit != cache->entries.end()) {
                    const LinePairCache::Entry& e = hit->second;
                    delta_sum += e.delta;
                    res.converged = res.converged && e.converged;
                    res.nodes_per_dim = std::max(res.nodes_per_dim, e.nodes);
                    it = pair_cache.emplace(key, cplx(e.re, e.im)).first;
                }
            }
            if (it == pair_cache.end()) {
                auto ev2 = [&](int n) {
                    const ContourNodes& c = contour_pair(n);
                    const size_t nn = c.z.size();
                    std::vector<cplx> wfa = gvec(c, key.first);
                    std::vector<cplx> wfb = gvec(c, key.second);
                    for (size_t i = 0; i < nn; ++i) {
                        wfa[i] *= c.w[i];
                        wfb[i] *= c.w[i];
                    }
                    std::vector<cplx> GA, GB;
                    cauchy_g(c, wfb, GA, GB, nn / 2);
                    // Conjugate-pair node symmetry: the mirrored outer half
                    // contributes the conjugate, so sum half and take 2 Re.
                    cplx s = 0.0;
                    for (size_t i = 0; i < nn / 2; ++i)
                        s += wfa[i] * (alpha(c.z[i]) * GA[i] + beta(c.z[i]) * GB[i]);
                    return cplx(2.0 * s.real(), 0.0);
                };
                const LadderOut L = ladder(ev2, n_pair0, cfg.max_refinements, 0.2 * atol);
                delta_sum += L.delta;
                res.converged = res.converged && L.converged;
                res.nodes_per_dim = std::max(res.nodes_per_dim, L.nodes);
                it = pair_cache.emplace(key, L.value).first;
                if (cache)
                    cache->entries[{t, key.first, key.second}] = {
                        L.value.real(), L.value.imag(), L.delta, L.nodes, L.converged};
            }
            cplx rest = 1.0;
            for (int c = 0; c < k; ++c)
                if (c != a && c != b) rest *= P[static_cast<size_t>(c)];
            pair_sum += it->second * rest;
        }

    cplx rem = 0.0;
    if (k == 3) {
        // With e_ab = q(z_a, z_b) - 1 the remainder R = prod q - 1 - sum e_ab
        // splits into three "two-bond" terms e_ab e_ac sharing a center
        // variable, plus the fully coupled three-bond term e12 e13 e23. Each
        // two-bond term collapses to 1D integrals of row sums (O(n^2) work),
        // so it gets a fine grid; only the small three-bond term stays 3D.
        auto fw = [&](const ContourNodes& c, int a) {
            const size_t nn = c.z.size();
            std::vector<cplx> v = gvec(c, xs[static_cast<size_t>(a)]);
            for (size_t i = 0; i < nn; ++i) v[i] *= c.w[i];
            return v;
        };
        auto ev2b = [&](int n) {
            const ContourNodes& c = contour(n);
            const size_t nn = c.z.size();
            const std::vector<cplx> wf1 = fw(c, 0), wf2 = fw(c, 1), wf3 = fw(c, 2);
            // Row sums via the rank-2 kernels: E_j(i) = sum_l wf_j[l] e(z_i, z_l)
            // (center first), A_j(l) = sum_i wf_j[i] e(z_i, z_l) (center second).
            std::vector<cplx> GA2, GB2, GA3, GB3, A1, A2;
            cauchy_g(c, wf2, GA2, GB2);
            cauchy_g(c, wf3, GA3, GB3);
            row_a(c, wf1, A1);
            row_a(c, wf2, A2);
            cplx s = 0.0;
            for (size_t i = 0; i < nn; ++i) {
                const cplx ai = alpha(c.z[i]), bi = beta(c.z[i]);
                const cplx E2 = ai * GA2[i] + bi * GB2[i];
                const cplx E3 = ai * GA3[i] + bi * GB3[i];
                s += wf1[i] * E2 * E3          // e12 e13, center 1
                     + wf2[i] * A1[i] * E3     // e12 e23, center 2
                     + wf3[i] * A1[i] * A2[i]; // e13 e23, center 3
            }
            return s;
        };
        const LadderOut L2b = ladder(ev2b, 384, cfg.max_refinements, 0.2 * atol);
        rem += L2b.value;
        delta_sum += L2b.delta;
        res.converged = res.converged && L2b.converged;
        res.nodes_per_dim = std::max(res.nodes_per_dim, L2b.nodes);

        // Three-bond term sum_{i,j,l} wf1_i wf2_j wf3_l e_ij e_il e_jl: the
        // inner sum K(i,j) = sum_l wf3_l e(z_i,z_l) e(z_j,z_l) collapses by
        // partial fractions to Cauchy sums GA/GB of wf3, making the whole
        // evaluation O(n^2):
        //   K(i,j) = [a_i a_j (GA_i - GA_j) + b_i b_j (GB_j - GB_i)]/(z_j - z_i)
        //          + [a_i b_j (GB_j - GA_i) + a_j b_i (GB_i - GA_j)]/(z_i + z_j),
        // except on the degenerate pairs z_j = z_i (diagonal) and z_j = -z_i
        // (mirror), which are summed directly.
        auto ev3b = [&](int n) {
            const ContourNodes& c = contour(n);
            const size_t nn = c.z.size();
            const std::vector<cplx> wf1 = fw(c, 0), wf2 = fw(c, 1), wf3 = fw(c, 2);
            std::vector<cplx> GA, GB;
            cauchy_g(c, wf3, GA, GB);
            std::vector<cplx> Kd(nn), Km(nn);
#pragma omp parallel for schedule(static)
            for (int64_t i = 0; i < static_cast<int64_t>(nn); ++i) {
                const size_t iu = static_cast<size_t>(i), im = nn - 1 - iu;
                cplx kd = 0.0, km = 0.0;
                for (size_t l = 0; l < nn; ++l) {
                    const cplx ei = q_half(c.z[iu], c.z[l]) - 1.0;
                    kd += wf3[l] * ei * ei;
                    km += wf3[l] * ei * (q_half(c.z[im], c.z[l]) - 1.0);
                }
                Kd[iu] = kd;
                Km[iu] = km;
            }
            // Nodes come in conjugate pairs (z[nn-1-m] = conj z[m], real
            // weights), so the sum over the mirrored half is the conjugate of
            // the first half: run i over half the grid and take 2 Re.
            const size_t half = nn / 2;
            std::vector<cplx> outer(half);
#pragma omp parallel for schedule(static)
            for (int64_t i = 0; i < static_cast<int64_t>(half); ++i) {
                const size_t iu = static_cast<size_t>(i);
                const cplx zi = c.z[iu], ai = alpha(zi), bi = beta(zi);
                cplx tot_i = 0.0;
                for (size_t j = 0; j < nn; ++j) {
                    cplx kij;
                    if (j == iu) {
                        kij = Kd[iu];
                    } else if (j == nn - 1 - iu) {
                        kij = Km[iu];
                    } else {
                        const cplx zj = c.z[j], aj = alpha(zj), bj = beta(zj);
                        kij = (ai * aj * (GA[iu] - GA[j]) + bi * bj * (GB[j] - GB[iu])) /
                                  (zj - zi) +
                              (ai * bj * (GB[j] - GA[iu]) + aj * bi * (GB[iu] - GA[j])) /
                                  (zi + zj);
                    }
                    tot_i += wf2[j] * (q_half(zi, c.z[j]) - 1.0) * kij;
                }
                outer[iu] = wf1[iu] * tot_i;
            }
            cplx s = 0.0;
            for (const cplx& v : outer) s += v;
            return cplx(2.0 * s.real(), 0.0);
        };
        const LadderOut L3b = ladder(ev3b, std::max(n_rem0, 256), cfg.max_refinements, atol);
        rem += L3b.value;
        delta_sum += L3b.delta;
        res.converged = res.converged && L3b.converged;
        res.nodes_per_dim = std::max(res.nodes_per_dim, L3b.nodes);
    }

    const cplx total = pref * (base + pair_sum + rem);
    res.value = total.real();
    res.imag_residue = std::fabs(total.imag());
    res.last_delta = delta_sum * std::fabs(pref);
    return res;
}

std::vector<Circle> nested_circles(const ModelParams& p, int k) {
    p.validate();
    if (k < 1) throw std::invalid_argument("nested_circles: k >= 1");
    const double m = std::min({p.mu, p.eta, 1.0});
    std::vector<Circle> circles(static_cast<size_t>(k));
    // Innermost: a small circle around mu.
    double left = p.mu - 0.15 * m;
    double right = p.mu + 0.15 * m;
    circles[static_cast<size_t>(k - 1)] = {cplx(p.mu, 0.0), 0.15 * m};
    for (int j = k - 2; j >= 0; --j) {
        // Each outer circle encloses inner + 1 with clearance; its left edge
        // stays in (-0.4 m, 0) so that -mu, -eta and the reflected loci
        // -gamma-1 remain strictly outside every contour.
        right = right + 1.0 + 0.15;
        const int level = (k - 1) - j;   // 1 = first ring outward
        left = -m * (0.40 - 0.25 * static_cast<double>(level - 1) / std::max(1, k - 2));
        circles[static_cast<size_t>(j)] = {cplx(0.5 * (left + right), 0.0),
                                           0.5 * (right - left)};
    }
    return circles;
}

void validate_circles(const std::vector<Circle>& circles,
                      const std::vector<cplx>& poles_inside_innermost,
                      const std::vector<cplx>& poles_outside, bool reflected,
                      double min_dist) {
    const int k = static_cast<int>(circles.size());
    for (int a = 0; a < k; ++a) {
        const Circle& ca = circles[static_cast<size_t>(a)];
        for (const cplx& q : poles_inside_innermost) {
            if (circle_point_distance(ca, q) < min_dist ||
                std::abs(q - ca.center) >= ca.radius)
                throw std::invalid_argument("validate_circles: interior pole misplaced");
        }
        for (const cplx& q : poles_outside) {
            if (circle_point_distance(ca, q) < min_dist ||
                std::abs(q - ca.center) <= ca.radius)
                throw std::invalid_argument("validate_circles: excluded pole misplaced");
        }
        for (int b = a + 1; b < k; ++b) {
            const Circle& cb = circles[static_cast<size_t>(b)];
            // Pole z_a = z_b + 1 must lie strictly inside gamma_a.
            const Circle shifted{cb.center + 1.0, cb.radius};
            if (!circle_encloses(ca, shifted, min_dist))
                throw std::invalid_argument("validate_circles: nesting violated");
            // Pole z_b = z_a - 1 must stay off the gamma_b curve.
            const Circle back{ca.center - 1.0, ca.radius};
            if (circle_curve_distance(back, cb) < min_dist)
                throw std::invalid_argument("validate_circles: back-shifted contour too close");
            if (reflected) {
                // Pole z_a = -z_b - 1 must stay off the gamma_a curve.
                const Circle refl{-cb.center - 1.0, cb.radius};
                if (circle_curve_distance(refl, ca) < min_dist)
                    throw std::invalid_argument("validate_circles: reflected contour too close");
            }
        }
    }
}

IntegralResult moment_integral_nested(const ModelParams& p, int64_t t,
                                      std::vector<int64_t> xs,
                                      std::vector<Circle> circles, QuadCfg cfg) {
    p.validate();
    const int k = static_cast<int>(xs.size());
    if (k < 1 || k > 4) throw std::invalid_argument("moment_integral_nested: k must be 1..4");
    for (int64_t x : xs) {
        if (x < 1) throw std::invalid_argument("moment_integral_nested: x must be >= 1");
        if (((t + x) % 2 + 2) % 2 != 1)
            throw std::invalid_argument("moment_integral_nested: t + x must be odd");
    }
    std::sort(xs.begin(), xs.end());
    if (circles.empty()) circles = nested_circles(p, k);
    if (static_cast<int>(circles.size()) != k)
        throw std::invalid_argument("moment_integral_nested: need one circle per variable");
    validate_circles(circles, {cplx(p.mu, 0.0)},
                     {cplx(-p.mu, 0.0), cplx(-p.eta, 0.0)},
                     /*reflected=*/true);
    const double pref = std::pow(2.0, k) * pochhammer_real(p.mu + p.eta, k);
    const int n0 = cfg.nodes_per_dim > 0 ? cfg.nodes_per_dim : default_nodes(k, true);

    auto eval = [&](int n) {
        std::vector<ContourNodes> cs;
        std::vector<std::vector<cplx>> gv(static_cast<size_t>(k));
        for (int a = 0; a < k; ++a) {
            cs.push_back(circle_contour(circles[static_cast<size_t>(a)], n));
            // The nested per-variable factor (z^2/(z^2-mu^2))^{t/2}
            // ((z-mu)/(z+mu))^{(x-1)/2} z/((z^2-mu^2)(z+eta)) reduces to the
            // same combined meromorphic factor as the line formula.
            for (const cplx& z : cs.back().z)
                gv[static_cast<size_t>(a)].push_back(
                    g_half(z, p.mu, p.eta, t, xs[static_cast<size_t>(a)]));
        }
        return product_quad(cs, gv, q_half);
    };
    return refine(eval, n0, cfg, pref);
}

std::vector<Circle> nested_circles_fullspace(const FullParams& p, int k) {
    p.validate();
    if (k < 1) throw std::invalid_argument("nested_circles_fullspace: k >= 1");
    const double s = std::min(p.alpha + p.beta, 1.0);
    std::vector<Circle> circles(static_cast<size_t>(k));
    double right = 0.2 * s;
    circles[static_cast<size_t>(k - 1)] = {cplx(0.0, 0.0), 0.2 * s};
    for (int j = k - 2; j >= 0; --j) {
        right = right + 1.0 + 0.15;
        const int level = (k - 1) - j;
        const double left =
            -s * (0.30 - 0.15 * static_cast<double>(level - 1) / std::max(1, k - 2));
        circles[static_cast<size_t>(j)] = {cplx(0.5 * (left + right), 0.0),
                                           0.5 * (right - left)};
    }
    return circles;
}

IntegralResult moment_integral_fullspace(const FullParams& p, int64_t t,
                                         std::vector<int64_t> xs,
                                         std::vector<Circle> circles, QuadCfg cfg) {
    p.validate();
    const int k = static_cast<int>(xs.size());
    if (k < 1 || k > 4)
        throw std::invalid_argument("moment_integral_fullspace: k must be 1..4");
    for (int64_t x : xs)
        if (((t + x) % 2 + 2) % 2 != 0)
            throw std::invalid_argument("moment_integral_fullspace: t + x must be even");
    std::sort(xs.begin(), xs.end(), std::greater<int64_t>());
    if (circles.empty()) circles = nested_circles_fullspace(p, k);
    if (static_cast<int>(circles.size()) != k)
        throw std::invalid_argument("moment_integral_fullspace: need one circle per variable");
    validate_circles(circles, {cplx(0.0, 0.0)},
                     {cplx(-p.alpha - p.beta, 0.0)}, /*reflected=*/false);
    const double pref = pochhammer_real(p.alpha + p.beta, k);
    const int n0 = cfg.nodes_per_dim > 0 ? cfg.nodes_per_dim : default_nodes(k, true);

    auto eval = [&](int n) {
        std::vector<ContourNodes> cs;
        std::vector<std::vector<cplx>> gv(static_cast<size_t>(k));
        for (int a = 0; a < k; ++a) {
            cs.push_back(circle_contour(circles[static_cast<size_t>(a)], n));
            for (const cplx& z : cs.back().z)
                gv[static_cast<size_t>(a)].push_back(
                    g_full(z, p.alpha, p.beta, t, xs[static_cast<size_t>(a)]));
        }
        return product_quad(cs, gv, q_full);
    };
    return refine(eval, n0, cfg, pref);
}

cplx boundary_vanishing_integral(const ModelParams& p, int64_t t, int r,
                                 const std::function<cplx(const std::vector<cplx>&)>& P_r,
                                 int n_per_dim) {
    p.validate();
    if (r < 1 || r > 3) throw std::invalid_argument("boundary_vanishing_integral: r must be 1..3");
    if (t < 2 || t % 2 != 0)
        throw std::invalid_argument("boundary_vanishing_integral: t must be positive even");
    if (n_per_dim % 2) ++n_per_dim;
    const std::vector<ContourNodes> cs = line_contours(r, p.mu, n_per_dim);
    std::vector<std::vector<cplx>> gv(static_cast<size_t>(r));
    for (int a = 0; a < r; ++a)
        for (const cplx& z : cs[static_cast<size_t>(a)].z)
            gv[static_cast<size_t>(a)].push_back(g_boundary(z, p.mu, p.eta, t));

    // Fold P_r into the innermost variable by wrapping the cross factor walk:
    // easiest is a dedicated odometer mirroring product_quad with the extra
    // symmetric factor evaluated on the full tuple.
    const int k = r;
    const int64_t n0 = static_cast<int64_t>(cs[0].z.size());
    std::vector<cplx> outer(static_cast<size_t>(n0));
#pragma omp parallel for schedule(static)
    for (int64_t i0 = 0; i0 < n0; ++i0) {
        std::vector<cplx> zs(static_cast<size_t>(k));
        cplx total = 0.0;
        zs[0] = cs[0].z[static_cast<size_t>(i0)];
        const cplx acc0 = cs[0].w[static_cast<size_t>(i0)] * gv[0][static_cast<size_t>(i0)];
        auto rec = [&](auto&& self, int d, cplx acc) -> void {
            if (d == k) {
                total += acc * P_r(zs);
                return;
            }
            const size_t n = cs[static_cast<size_t>(d)].z.size();
            for (size_t i = 0; i < n; ++i) {
                const cplx z = cs[static_cast<size_t>(d)].z[i];
                cplx w = acc * cs[static_cast<size_t>(d)].w[i] * gv[static_cast<size_t>(d)][i];
                for (int j = 0; j < d; ++j) w *= q_half(zs[static_cast<size_t>(j)], z);
                zs[static_cast<size_t>(d)] = z;
                self(self, d + 1, w);
            }
        };
        rec(rec, 1, acc0);
        outer[static_cast<size_t>(i0)] = total;
    }
    cplx sum = 0.0;
    for (const cplx& v : outer) sum += v;
    return std::pow(-2.0, k) * pochhammer_real(p.mu + p.eta, k) * sum;
}

cplx qg_calibration_integral(const ModelParams& p, int k, int n_per_dim) {
    p.validate();
    if (k < 1 || k > 3) throw std::invalid_argument("qg_calibration_integral: k must be 1..3");
    if (n_per_dim % 2) ++n_per_dim;
    const std::vector<ContourNodes> cs = line_contours(k, p.mu, n_per_dim);
    std::vector<std::vector<cplx>> gv(static_cast<size_t>(k));
    for (int a = 0; a < k; ++a)
        for (const cplx& z : cs[static_cast<size_t>(a)].z)
            gv[static_cast<size_t>(a)].push_back(
                z / ((z - p.mu) * (z + p.mu) * (z + p.eta)));
    return product_quad(cs, gv, q_half);
}

} // namespace rwre

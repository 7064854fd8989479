// hankel.cpp — deformed exponential and Hankel-transform utilities.
#include "rwre/hankel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>
#include "rwre/contours.hpp"
#include "rwre/sampling.hpp"
#include "rwre/specfun.hpp"

namespace rwre {

double f_nu_series(double nu, double x, int max_terms) {
    if (!(nu > 0.0)) throw std::invalid_argument("f_nu_series: need nu > 0");
    long double sum = 1.0L, term = 1.0L;
    const long double lx = static_cast<long double>(x);
    for (int k = 1; k <= max_terms; ++k) {
        term *= lx / (static_cast<long double>(k) *
                      (static_cast<long double>(nu) + (k - 1)));
        sum += term;
        if (std::fabs(static_cast<double>(term)) <
            1e-18 * (1.0 + std::fabs(static_cast<double>(sum))) && k > 8)
            break;
    }
    return static_cast<double>(sum);
}

double f_nu(double nu, double x) {
    if (!(nu > 0.0)) throw std::invalid_argument("f_nu: need nu > 0");
    if (x == 0.0) return 1.0;
    if (x > 0.0 || x > -1e-6) return f_nu_series(nu, x);
    const double r = -x;
    // F_nu(-r) = Gamma(nu) r^{-(nu-1)/2} J_{nu-1}(2 sqrt r).
    const double s = 2.0 * std::sqrt(r);
    return std::exp(log_gamma_real(nu) - 0.5 * (nu - 1.0) * std::log(r)) *
           bessel_j(nu - 1.0, s);
}

double hankel_of_sample(double nu, const std::vector<double>& samples, double zeta) {
    if (samples.empty()) throw std::invalid_argument("hankel_of_sample: empty sample");
    double sum = 0.0, comp = 0.0;   // Kahan
    for (double v : samples) {
        const double y = f_nu(nu, zeta * v) - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum / static_cast<double>(samples.size());
}

double hankel_gamma_identity(double nu, double z) {
    if (!(nu > 0.5)) throw std::invalid_argument("hankel_gamma_identity: need nu > 1/2");
    // int_0^inf F_nu(z x) x^{nu-1} e^{-x} dx / Gamma(nu), x = u^4.
    static const GaussLegendre gl = gauss_legendre(32);
    const double umax = std::pow(200.0, 0.25);
    const int panels = 12;
    const double lg = log_gamma_real(nu);
    double sum = 0.0;
    for (int pnl = 0; pnl < panels; ++pnl) {
        const double a = umax * pnl / panels;
        const double b = umax * (pnl + 1) / panels;
        for (int i = 0; i < 32; ++i) {
            const double u = 0.5 * (a + b) + 0.5 * (b - a) * gl.x[static_cast<size_t>(i)];
            const double w = 0.5 * (b - a) * gl.w[static_cast<size_t>(i)];
            if (u <= 0.0) continue;
            const double xx = u * u * u * u;
            const double dens = std::exp((4.0 * nu - 1.0) * std::log(u) - xx - lg) * 4.0;
            sum += w * f_nu(nu, z * xx) * dens;
        }
    }
    return sum;
}

double BridgeReport::combined_se() const {
    return std::sqrt(hankel_se * hankel_se + laplace_se * laplace_se);
}

BridgeReport laplace_bridge_check(double nu,
                                  const std::function<double(PhiloxStream&)>& sampler,
                                  double t, uint64_t n, uint64_t seed) {
    if (n == 0) throw std::invalid_argument("laplace_bridge_check: need n >= 1");
    double hs = 0.0, hs2 = 0.0, ls = 0.0, ls2 = 0.0;
    for (uint64_t i = 0; i < n; ++i) {
        PhiloxStream sx(seed, 0, 0, static_cast<uint32_t>(i), 11);
        PhiloxStream sz(seed, 0, 1, static_cast<uint32_t>(i), 12);
        const double x = sampler(sx);
        const double zg = gamma_draw(nu, sz);
        const double h = f_nu(nu, -t * zg * x);
        const double l = std::exp(-t * x);
        hs += h;
        hs2 += h * h;
        ls += l;
        ls2 += l * l;
    }
    const double dn = static_cast<double>(n);
    BridgeReport r;
    r.hankel_mc = hs / dn;
    r.laplace_mc = ls / dn;
    r.hankel_se = std::sqrt(std::max(0.0, hs2 / dn - r.hankel_mc * r.hankel_mc) /
                            std::max(1.0, dn - 1.0));
    r.laplace_se = std::sqrt(std::max(0.0, ls2 / dn - r.laplace_mc * r.laplace_mc) /
                             std::max(1.0, dn - 1.0));
    return r;
}

} // namespace rwre

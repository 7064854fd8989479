// hankel.hpp
// The deformed exponential F_nu(x) = sum_k x^k / (k! (nu)_k), its Bessel
// representation on the negative axis, Hankel transforms of samples, and the
// Gamma-mixing Laplace bridge used to identify limit laws.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>
#include "rwre/philox.hpp"

namespace rwre {

// F_nu(x); x <= 0 uses F_nu(-r) = Gamma(nu) r^{-(nu-1)/2} J_{nu-1}(2 sqrt r),
// x > 0 and small |x| use the positive series. Absolute error <= 1e-9 for
// nu > 1/2, x in [-1e6, 1e6].
double f_nu(double nu, double x);

// Direct power series in long double (test oracle; accurate for |x| <= 50).
double f_nu_series(double nu, double x, int max_terms = 400);

// Empirical mean of F_nu(zeta * X_i) over a sample.
double hankel_of_sample(double nu, const std::vector<double>& samples, double zeta);

// Deterministic quadrature of E[F_nu(z G)] for G ~ Gamma(nu); equals e^z.
// The substitution x = u^4 removes the x^{nu-1} endpoint singularity.
double hankel_gamma_identity(double nu, double z);

// Monte Carlo check of E[F_nu(-t Z X)] = E[e^{-t X}] with Z ~ Gamma(nu)
// independent of X; `sampler` draws X from its stream.
struct BridgeReport {
    double hankel_mc = 0.0;
    double laplace_mc = 0.0;
    double hankel_se = 0.0;
    double laplace_se = 0.0;
    double deviation() const { return hankel_mc - laplace_mc; }
    double combined_se() const;
};
BridgeReport laplace_bridge_check(double nu,
                                  const std::function<double(PhiloxStream&)>& sampler,
                                  double t, uint64_t n, uint64_t seed);

} // namespace rwre

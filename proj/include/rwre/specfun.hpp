// specfun.hpp
// Scalar special functions used by the analytic formulas: complex log-gamma
// (Lanczos), polygamma psi_0..psi_3, real-order Bessel J, the regularized
// lower incomplete gamma, and Pochhammer symbols.
#pragma once

#include <complex>
#include <cstdint>

namespace rwre {

using cplx = std::complex<double>;

// Principal-branch log Gamma(z) (Lanczos g=7, 9 terms; reflection for Re z < 1/2).
// exp(log_gamma(z)) is accurate to ~1e-13 relative on the acceptance window.
cplx log_gamma(cplx z);

// Gamma(z) = exp(log_gamma(z)).
inline cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

// Real log Gamma for x > 0.
double log_gamma_real(double x);

// psi_n(x) for n in {0,1,2,3}, x > 0 (digamma, trigamma, ...).
double polygamma(int n, double x);

// Bessel J_nu(x) for real order nu >= -1/2 and x >= 0.
// Power series below the switch point, Hankel asymptotics beyond.
double bessel_j(double nu, double x);

// Regularized lower incomplete gamma P(shape, x) in [0,1].
double regularized_gamma_p(double shape, double x);

// Pochhammer (a)_k = a(a+1)...(a+k-1); log-space for large k to avoid overflow.
cplx pochhammer(cplx a, int k);
double pochhammer_real(double a, int k);
double log_pochhammer(double a, int k);   // requires a > 0

} // namespace rwre

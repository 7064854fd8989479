// fredholm.hpp
// Hankel transforms of return probabilities as operator expansions:
//   - half-space: E[F_{mu+eta}(-zeta P_{0,T}(1,1))] = Pf(J + zeta K) on
//     L^2(iR x {1,2}), evaluated both as a truncated series of 2k-dim
//     quadratures of 2k x 2k Pfaffians and as the Pfaffian of a single
//     weighted contour discretization;
//   - full-space: E[F_{alpha+beta}(zeta P^Z_{0,t}(x,0))] = det(I + zeta L)
//     on a vertical line inside (-alpha-beta, 0), by Nystrom discretization.
// T denotes the even time horizon (the kernel exponent is T/2).
#pragma once

#include <cstdint>
#include <vector>
#include "rwre/contours.hpp"
#include "rwre/params.hpp"

namespace rwre {

// Partial sum 1 + sum_{k=1..k_max} (-zeta)^k E[P^k] / (k! (nu)_k) from
// externally supplied moments (moments[k-1] = E[P^k]).
cplx generating_series(const std::vector<double>& moments, double nu, cplx zeta);

struct PfSeriesResult {
    cplx value;                    // 1 + sum of terms
    std::vector<cplx> terms;       // term k at index k-1
};

// Zeta-independent series integrals I_k (term k of the expansion is
// (-zeta)^k / k! * I_k; analytically I_k = E[P^k] / (mu+eta)_k). The 2k x 2k
// Pfaffian collapses by Schur's identity to a pairwise cross factor, so each
// I_k is a k-dimensional product quadrature under a Richardson ladder.
// nodes_per_dim = 0 picks per-k defaults.
std::vector<cplx> fredholm_pfaffian_series_integrals(const ModelParams& p, int64_t T,
                                                     int k_max, int nodes_per_dim = 0);

// Series evaluation of Pf(J + zeta K) assembled from the integrals above.
PfSeriesResult fredholm_pfaffian_series(const ModelParams& p, int64_t T, cplx zeta,
                                        int k_max, int nodes_per_dim = 0);

// Pfaffian of the 2N x 2N discretization J + zeta * sqrt(w_i w_j) c_i c_j A,
// where c_i^2 is the scalar kernel factor at node i and A is the exact skew
// Cauchy-type matrix. scale = 0 picks mu * max(1, sqrt(T/2)).
cplx fredholm_pfaffian_discretized(const ModelParams& p, int64_t T, cplx zeta,
                                   int nodes, double scale = 0.0);

// Nystrom determinant det(I + zeta L) for the full-space walk; eta_hat = 0
// picks -(alpha+beta)/2, scale = 0 picks max(1, sqrt(2 t alpha beta)).
// Requires t + x even.
cplx fredholm_determinant_fullspace(const FullParams& p, int64_t t, int64_t x,
                                    cplx zeta, int nodes, double eta_hat = 0.0,
                                    double scale = 0.0);

} // namespace rwre

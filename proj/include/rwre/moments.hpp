// moments.hpp
// Contour-integral evaluation of annealed mixed moments:
//   - vertical-line formula on iR^k (half-space),
//   - nested positively-oriented circles (half-space),
//   - nested circles for the full-space walk.
// The half-integer-looking exponents are combined into integer-power
// meromorphic factors before evaluation, so no branch cuts appear on the
// parity set. Circle ladders are constructed automatically and validated
// against every pole locus at runtime.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>
#include "rwre/contours.hpp"
#include "rwre/params.hpp"

namespace rwre {

struct QuadCfg {
    int nodes_per_dim = 0;       // 0 = per-dimension default
    int max_refinements = 3;     // node-doubling rounds
    double rel_tol = 1e-9;       // stop when successive values agree to this
    double line_scale = 0.0;     // tan-map scale for iR; 0 = 1.5 (mu + eta)
};

struct IntegralResult {
    double value = 0.0;
    double imag_residue = 0.0;   // |Im| of the final complex estimate
    double last_delta = 0.0;     // |change| at the final refinement
    int nodes_per_dim = 0;
    bool converged = false;
};

// Cross-call cache for the 2D pair integrals of the k >= 2 cluster
// decomposition, keyed by (t, x_a, x_b). Reusable across calls that share the
// model parameters and quadrature config; callers sweeping a moment grid save
// the dominant share of the work this way.
struct LinePairCache {
    struct Entry {
        double re = 0.0, im = 0.0, delta = 0.0;
        int nodes = 0;
        bool converged = false;
    };
    std::map<std::array<int64_t, 3>, Entry> entries;
};

// E[prod_i P_{0,t}(x_i,1)] by k-dimensional Gauss-Legendre quadrature on the
// tan-mapped line iR, prefactor (-2)^k (mu+eta)_k included. Requires t + x_i
// odd, x_i >= 1, k <= 3.
IntegralResult moment_integral_line(const ModelParams& p, int64_t t,
                                    std::vector<int64_t> xs, QuadCfg cfg = {},
                                    LinePairCache* cache = nullptr);

// Default nested-circle ladder: the innermost circle is a small circle
// around mu; each outer circle extends one unit (plus clearance) to the
// right so it encloses inner+1, while every left edge stays within
// (-0.4*m, 0) for m = min(mu, eta, 1), which keeps -mu, -eta and all
// reflected loci -gamma-1 strictly outside. Index 0 is the outermost.
std::vector<Circle> nested_circles(const ModelParams& p, int k);

// Same moment by trapezoid rule over nested circles (prefactor
// 2^k (mu+eta)_k). Pass empty circles to use nested_circles(). k <= 4.
IntegralResult moment_integral_nested(const ModelParams& p, int64_t t,
                                      std::vector<int64_t> xs,
                                      std::vector<Circle> circles = {},
                                      QuadCfg cfg = {});

// Full-space ladder: innermost circle around 0, excluding -alpha-beta,
// gamma_i encloses gamma_j + 1 for i < j. Index 0 is the outermost.
std::vector<Circle> nested_circles_fullspace(const FullParams& p, int k);

// E[prod_i P^Z_{0,t}(x_i,0)] with prefactor (alpha+beta)_k; x sorted
// descending internally; t + x_i even; k <= 4.
IntegralResult moment_integral_fullspace(const FullParams& p, int64_t t,
                                         std::vector<int64_t> xs,
                                         std::vector<Circle> circles = {},
                                         QuadCfg cfg = {});

// Throws std::invalid_argument when any circle curve comes closer than
// min_dist to a pole point, or when the nesting/exclusion constraints are
// violated. `reflected` adds the half-space -gamma-1 checks.
void validate_circles(const std::vector<Circle>& circles,
                      const std::vector<cplx>& poles_inside_innermost,
                      const std::vector<cplx>& poles_outside,
                      bool reflected, double min_dist = 0.05);

// Boundary-vanishing invariant: the line integral with the first r variables
// carrying the boundary-condition factor (z^2/(z^2-mu^2))^{t/2} /
// (z (z^2-mu^2)(z+eta)) times P_r(z_1..z_r), and prefactor (-2)^r (mu+eta)_r,
// must vanish. `P_r` receives the r integration variables. t must be even.
cplx boundary_vanishing_integral(const ModelParams& p, int64_t t, int r,
                                 const std::function<cplx(const std::vector<cplx>&)>& P_r,
                                 int n_per_dim);

// Cross-factor calibration: integral of prod q * prod g0 over iR^k with
// g0(z) = z / ((z-mu-i)(z+mu+i)(z+eta)) equals (-1/2)^k / (mu+eta)_k.
cplx qg_calibration_integral(const ModelParams& p, int k, int n_per_dim);

} // namespace rwre

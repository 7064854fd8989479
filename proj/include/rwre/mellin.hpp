// mellin.hpp
// Mellin–Barnes representation of the Hankel transform of P_{0,t}(x,1):
// an expansion whose ell-th term is a 2*ell-fold contour integral pairing a
// truncated wedge contour (z variables) with a small circle around mu
// (w variables). Valid for x >= 1 odd, t >= 2 even, zeta off the negative
// real axis.
#pragma once

#include <cstdint>
#include <vector>
#include "rwre/contours.hpp"
#include "rwre/params.hpp"

namespace rwre {

struct MellinResult {
    cplx value;                     // 1 + sum of the computed terms
    std::vector<double> term_mags;  // |term_ell| at index ell-1
    double truncation_proxy = 0.0;  // |last term| / max(1, |value|)
};

// Evaluate the expansion through ell_max terms (1..3). nodes_per_ray counts
// wedge nodes on each of the two rays, nodes_circle the trapezoid nodes on
// the w circle, wedge_R the ray truncation radius (the integrand decays
// super-exponentially, ~exp(-r log r / 2), so R = 40 is far past roundoff).
// The ell = 3 term costs (pairs)^3 inner products and requires reduced node
// counts; it throws if the pruned pair grid is too large.
MellinResult mellin_barnes_transform(const ModelParams& p, int64_t x, int64_t t,
                                     cplx zeta, int ell_max,
                                     int nodes_per_ray = 40, int nodes_circle = 48,
                                     double wedge_R = 40.0);

} // namespace rwre

// sampling.hpp
// Gamma and Beta variates on top of a PhiloxStream. Gamma uses the
// Marsaglia–Tsang squeeze method (with the shape<1 power boost); Beta is
// G_a/(G_a+G_b). Everything consumes a caller-owned stream, so the draw at
// a lattice site is a pure function of the stream coordinates.
#pragma once

#include <cmath>
#include <stdexcept>
#include "rwre/philox.hpp"

namespace rwre {

// Standard normal via Box–Muller (one value per call; the discarded twin
// keeps the per-draw stream consumption simple and still deterministic).
inline double normal_draw(PhiloxStream& s) {
    const double u1 = s.next_u01();
    const double u2 = s.next_u01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

// Gamma(shape a, scale 1), Marsaglia–Tsang (2000).
inline double gamma_draw(double a, PhiloxStream& s) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma_draw: shape must be positive");
    if (a < 1.0) {
        const double g = gamma_draw(a + 1.0, s);
        const double u = s.next_u01();
        return g * std::pow(u, 1.0 / a);
    }
    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal_draw(s);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = s.next_u01();
        if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

// Beta(a,b) in the open interval (0,1).
inline double beta_draw(double a, double b, PhiloxStream& s) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("beta_draw: shapes must be positive");
    if (a == 1.0 && b == 1.0) return s.next_u01();   // uniform fast path
    const double ga = gamma_draw(a, s);
    const double gb = gamma_draw(b, s);
    double w = ga / (ga + gb);
    if (w <= 0.0) w = 0x1.0p-53;
    if (w >= 1.0) w = 1.0 - 0x1.0p-53;
    return w;
}

} // namespace rwre

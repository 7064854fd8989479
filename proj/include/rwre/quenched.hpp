// quenched.hpp
// Exact dynamic-programming evaluation of the quenched heat kernel
// P_{s,t}(x, y*) in one sampled environment (half-space and full-space),
// plus the point-to-line Z functionals and the coalescence gap.
#pragma once

#include <cstdint>
#include <vector>
#include "rwre/environment.hpp"

namespace rwre {

// One backward slice: x |-> P_{s,t}(x, y_star) for a single environment.
struct KernelSlice {
    int64_t s = 0, t = 0, y_star = 0;
    int64_t x_min = 0;               // index offset of values[0]
    std::vector<double> values;      // values[x - x_min] = P_{s,t}(x, y_star)

    double at(int64_t x) const {
        const int64_t i = x - x_min;
        if (i < 0 || i >= static_cast<int64_t>(values.size())) return 0.0;
        return values[static_cast<size_t>(i)];
    }
};

// Backward recursion v_s(x) = W_{s,x} v_{s+1}(x+1) + (1-W_{s,x}) v_{s+1}(x-1)
// (x >= 1; v_s(0) = v_{s+1}(1) in half-space mode), v_t = indicator of y_star.
// One O((t-s)^2) sweep serves every starting point x at once.
KernelSlice backward_kernel(const Environment& env, int64_t s, int64_t t, int64_t y_star);

// Point-to-line functional: the L-truncation of Z_t(x) (half-space) or
// Z^Z_t(x) (full-space): sum over z of P_{t-L,t}(z, x).
struct ZSample {
    int64_t t = 0, x = 0;
    std::vector<int64_t> ladder_L;       // the geometric ladder of truncations
    std::vector<double> ladder_value;    // Z value at each L
    bool converged = false;              // last two ladder values within 1e-3 relative
    double value() const { return ladder_value.empty() ? 0.0 : ladder_value.back(); }
};

ZSample z_functional(const Environment& env, int64_t t, int64_t x, int64_t L_max);

// |P_{0,t}(1,1) - P_{0,t}(x,1)| for one environment (0 off parity).
double coalescence_gap(const Environment& env, int64_t t, int64_t x);

} // namespace rwre

// quenched.cpp — backward heat-kernel DP, Z functionals, coalescence gap.
#include "rwre/quenched.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include "rwre/params.hpp"

namespace rwre {

KernelSlice backward_kernel(const Environment& env, int64_t s, int64_t t, int64_t y_star) {
    if (s > t) throw std::invalid_argument("backward_kernel: need s <= t");
    const bool half = env.mode() == EnvMode::HalfSpace;
    if (half && y_star < 0) throw std::invalid_argument("backward_kernel: y_star < 0 in half-space");

    const int64_t span_lo = half ? 0 : y_star - (t - s) - 1;
    const int64_t span_hi = y_star + (t - s) + 1;
    const size_t n = static_cast<size_t>(span_hi - span_lo + 1);
    std::vector<double> cur(n, 0.0), next(n, 0.0);
    cur[static_cast<size_t>(y_star - span_lo)] = 1.0;   // v_t = indicator of y_star

    for (int64_t sp = t - 1; sp >= s; --sp) {
        const int64_t reach = t - sp;                    // |x - y_star| <= reach
        int64_t x_lo = half ? std::max<int64_t>(0, y_star - reach)
                            : std::max(span_lo + 1, y_star - reach);
        const int64_t x_hi = std::min(span_hi - 1, y_star + reach);
        // Active parity at time sp: x + sp == y_star + t (mod 2).
        const int64_t want = (((y_star + t - sp) % 2) + 2) % 2;
        if ((((x_lo % 2) + 2) % 2) != want) ++x_lo;
        std::fill(next.begin(), next.end(), 0.0);
        for (int64_t x = x_lo; x <= x_hi; x += 2) {
            const size_t i = static_cast<size_t>(x - span_lo);
            if (half && x == 0) {
                next[i] = cur[i + 1];                    // forced step 0 -> 1
                continue;
            }
            const double w = env.weight(sp, x);
            next[i] = w * cur[i + 1] + (1.0 - w) * cur[i - 1];
        }
        cur.swap(next);
    }

    KernelSlice slice;
    slice.s = s;
    slice.t = t;
    slice.y_star = y_star;
    slice.x_min = span_lo;
    slice.values = std::move(cur);
    return slice;
}

ZSample z_functional(const Environment& env, int64_t t, int64_t x, int64_t L_max) {
    if (L_max < 1) throw std::invalid_argument("z_functional: need L_max >= 1");
    if (t < L_max) throw std::invalid_argument("z_functional: window too small (t < L_max)");
    const bool half = env.mode() == EnvMode::HalfSpace;
    if (half && x < 0) throw std::invalid_argument("z_functional: x < 0 in half-space");

    ZSample out;
    out.t = t;
    out.x = x;
    for (int64_t L = 1; L <= L_max; L *= 2) out.ladder_L.push_back(L);
    if (out.ladder_L.back() != L_max) out.ladder_L.push_back(L_max);

    for (int64_t L : out.ladder_L) {
        const KernelSlice slice = backward_kernel(env, t - L, t, x);
        const int64_t z_lo = half ? std::max<int64_t>(0, x - L) : x - L;
        // Kahan-compensated sum over the line of starting points.
        double sum = 0.0, comp = 0.0;
        for (int64_t z = z_lo; z <= x + L; ++z) {
            const double y = slice.at(z) - comp;
            const double tmp = sum + y;
            comp = (tmp - sum) - y;
            sum = tmp;
        }
        out.ladder_value.push_back(sum);
    }
    const size_t m = out.ladder_value.size();
    if (m >= 2) {
        const double a = out.ladder_value[m - 2], b = out.ladder_value[m - 1];
        out.converged = std::fabs(a - b) <= 1e-3 * std::max(1e-300, std::fabs(b));
    }
    return out;
}

double coalescence_gap(const Environment& env, int64_t t, int64_t x) {
    if (x <= 1) throw std::invalid_argument("coalescence_gap: need x > 1");
    const KernelSlice slice = backward_kernel(env, 0, t, 1);
    return std::fabs(slice.at(1) - slice.at(x));
}

} // namespace rwre

// contours.cpp — quadrature node construction.
#include "rwre/contours.hpp"

#include <cmath>
#include <stdexcept>

namespace rwre {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
}

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
    GaussLegendre gl;
    gl.x.resize(static_cast<size_t>(n));
    gl.w.resize(static_cast<size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-style initial guess, then Newton on P_n.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        gl.x[static_cast<size_t>(i)] = -x;
        gl.x[static_cast<size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        gl.w[static_cast<size_t>(i)] = w;
        gl.w[static_cast<size_t>(n - 1 - i)] = w;
    }
    return gl;
}

ContourNodes line_contour(double scale, int n) {
    if (!(scale > 0.0)) throw std::invalid_argument("line_contour: need scale > 0");
    const GaussLegendre gl = gauss_legendre(n);
    ContourNodes c;
    c.z.reserve(static_cast<size_t>(n));
    c.w.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double u = 0.5 * kPi * gl.x[static_cast<size_t>(i)];
        const double sec2 = 1.0 / (std::cos(u) * std::cos(u));
        c.z.emplace_back(0.0, scale * std::tan(u));
        // dz/(2 pi i) = scale * sec^2(u) du / (2 pi),  du = (pi/2) dw
        c.w.emplace_back(scale * sec2 * gl.w[static_cast<size_t>(i)] * 0.5 * kPi / kTwoPi, 0.0);
    }
    return c;
}

ContourNodes circle_contour(const Circle& circ, int n) {
    if (!(circ.radius > 0.0)) throw std::invalid_argument("circle_contour: need radius > 0");
    ContourNodes c;
    c.z.reserve(static_cast<size_t>(n));
    c.w.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double th = kTwoPi * (j + 0.5) / n;   // offset avoids the real axis
        const cplx e(std::cos(th), std::sin(th));
        c.z.push_back(circ.center + circ.radius * e);
        // dz/(2 pi i) = (z - center) dtheta / (2 pi) = (z - center)/n per node
        c.w.push_back(circ.radius * e / static_cast<double>(n));
    }
    return c;
}

ContourNodes wedge_contour(double apex, double theta, double R, int n_per_ray) {
    if (!(theta > 0.0) || !(theta < kPi)) throw std::invalid_argument("wedge_contour: bad angle");
    if (!(R > 0.0)) throw std::invalid_argument("wedge_contour: need R > 0");
    const GaussLegendre gl = gauss_legendre(n_per_ray);
    ContourNodes c;
    const cplx e_up(std::cos(theta), std::sin(theta));
    const cplx e_dn = std::conj(e_up);
    const double smax = std::sqrt(R);
    // Bottom-to-top orientation: down-ray traversed inward (R -> 0) first,
    // then up-ray outward (0 -> R). Substitution r = s^2 clusters nodes at
    // the apex; dr = 2 s ds.
    for (int i = 0; i < n_per_ray; ++i) {
        const double s = 0.5 * smax * (gl.x[static_cast<size_t>(i)] + 1.0);
        const double ds = 0.5 * smax * gl.w[static_cast<size_t>(i)];
        const double r = s * s;
        c.z.push_back(apex + r * e_dn);
        c.w.push_back(-e_dn * (2.0 * s * ds) / cplx(0.0, kTwoPi));
    }
    for (int i = 0; i < n_per_ray; ++i) {
        const double s = 0.5 * smax * (gl.x[static_cast<size_t>(i)] + 1.0);
        const double ds = 0.5 * smax * gl.w[static_cast<size_t>(i)];
        const double r = s * s;
        c.z.push_back(apex + r * e_up);
        c.w.push_back(e_up * (2.0 * s * ds) / cplx(0.0, kTwoPi));
    }
    return c;
}

double circle_curve_distance(const Circle& a, const Circle& b) {
    const double d = std::abs(a.center - b.center);
    if (d >= a.radius + b.radius) return d - a.radius - b.radius;      // external
    const double inner = std::fabs(a.radius - b.radius);
    if (d <= inner) return inner - d;                                   // one inside the other
    return 0.0;                                                         // intersecting
}

double circle_point_distance(const Circle& c, cplx p) {
    return std::fabs(std::abs(p - c.center) - c.radius);
}

bool circle_encloses(const Circle& outer, const Circle& inner, double d) {
    return std::abs(outer.center - inner.center) + inner.radius + d <= outer.radius;
}

} // namespace rwre

// contours.hpp
// Quadrature primitives for the contour formulas: Gauss–Legendre rules, the
// tan-mapped vertical line iR, trapezoid circles, and the truncated wedge
// rays of the Mellin–Barnes contour. Every node list carries weights that
// already include the dz/(2*pi*i) measure.
#pragma once

#include <complex>
#include <vector>

namespace rwre {

using cplx = std::complex<double>;

struct GaussLegendre {
    std::vector<double> x;   // nodes on [-1,1]
    std::vector<double> w;
};

// n-point Gauss–Legendre rule (Newton iteration on P_n).
GaussLegendre gauss_legendre(int n);

struct ContourNodes {
    std::vector<cplx> z;
    std::vector<cplx> w;   // quadrature weight including dz/(2*pi*i)
};

// Vertical line iR parametrized z = i*scale*tan(u), u in (-pi/2, pi/2);
// algebraic 1/y^2 tails map to a finite smooth integrand.
ContourNodes line_contour(double scale, int n);

struct Circle {
    cplx center;
    double radius = 0.0;
};

// Positively oriented circle, n-point trapezoid rule (spectrally accurate
// for meromorphic integrands).
ContourNodes circle_contour(const Circle& c, int n);

// Wedge C_a^theta: two rays a + r e^{±i theta}, r in (0, R], oriented bottom
// to top. Nodes cluster at the apex via the substitution r = s^2.
ContourNodes wedge_contour(double apex, double theta, double R, int n_per_ray);

// Minimum distance between two circles (as curves).
double circle_curve_distance(const Circle& a, const Circle& b);

// Distance from a point to a circle curve.
double circle_point_distance(const Circle& c, cplx p);

// True iff disk(inner) lies strictly inside disk(outer) with clearance d.
bool circle_encloses(const Circle& outer, const Circle& inner, double d);

} // namespace rwre

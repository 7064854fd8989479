// constants.cpp — steepest-descent scaling constants.
#include "rwre/constants.hpp"

#include <cmath>
#include <stdexcept>
#include "rwre/specfun.hpp"

namespace rwre {

namespace {

void check_args(double z, double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("scaling constants: mu must be positive");
    if (!(z > mu)) throw std::invalid_argument("scaling constants: need z > mu");
}

} // namespace

double scaling_G(double z, double mu, double x_theta) {
    check_args(z, mu);
    const double l0 = log_gamma_real(z);
    const double lp = log_gamma_real(z + mu);
    const double lm = log_gamma_real(z - mu);
    return 2.0 * l0 - lp - lm + x_theta * (lm - lp);
}

double scaling_G_deriv(int n, double z, double mu, double x_theta) {
    check_args(z, mu);
    if (n < 1 || n > 3) throw std::invalid_argument("scaling_G_deriv: n must be 1..3");
    const double p0 = polygamma(n - 1, z);
    const double pp = polygamma(n - 1, z + mu);
    const double pm = polygamma(n - 1, z - mu);
    return 2.0 * p0 - pp - pm + x_theta * (pm - pp);
}

double x_theta_of(double mu, double theta) {
    check_args(theta, mu);
    const double t1 = polygamma(1, theta);
    const double tp = polygamma(1, theta + mu);
    const double tm = polygamma(1, theta - mu);
    // psi_1 is strictly decreasing, so the denominator tp - tm is negative
    // and bounded away from zero for theta > mu.
    return (2.0 * t1 - tp - tm) / (tp - tm);
}

ScalingConstants scaling_constants(double mu, double theta) {
    ScalingConstants c;
    c.theta = theta;
    c.x_theta = x_theta_of(mu, theta);
    c.a_theta = -scaling_G_deriv(1, theta, mu, c.x_theta);
    const double g3 = scaling_G_deriv(3, theta, mu, c.x_theta);
    c.b_theta = std::cbrt(0.5 * g3);
    return c;
}

} // namespace rwre

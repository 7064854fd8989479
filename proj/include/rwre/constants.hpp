// constants.hpp
// Steepest-descent scaling constants for the boundary return probability at
// general drift parameter theta > mu: the tilt exponent x_theta chosen so
// that G''(theta) = 0, the velocity a_theta = -G'(theta), and the KPZ-scale
// coefficient b_theta = (G'''(theta)/2)^{1/3}.
#pragma once

namespace rwre {

struct ScalingConstants {
    double theta = 0.0;
    double x_theta = 0.0;
    double a_theta = 0.0;
    double b_theta = 0.0;
};

// G(z) = log(Gamma(z)^2 / (Gamma(z+mu) Gamma(z-mu)))
//        + x_theta * log(Gamma(z-mu) / Gamma(z+mu)),  z > mu.
double scaling_G(double z, double mu, double x_theta);

// n-th derivative of G, n in {1,2,3}, via polygamma.
double scaling_G_deriv(int n, double z, double mu, double x_theta);

// x_theta = (2 psi_1(theta) - psi_1(theta+mu) - psi_1(theta-mu))
//           / (psi_1(theta+mu) - psi_1(theta-mu)); requires theta > mu.
double x_theta_of(double mu, double theta);

// All constants at (mu, theta); a_theta = -G'(theta), b_theta as above.
ScalingConstants scaling_constants(double mu, double theta);

} // namespace rwre

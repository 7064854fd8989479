#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include "rwre/constants.hpp"

using namespace rwre;

TEST_CASE("x_theta closed-form anchor and limits") {
    CHECK(std::abs(x_theta_of(1.0, 2.0) - 0.6) < 1e-10);
    // Strictly decreasing across (mu, mu + 20).
    const double mu = 1.0;
    double prev = 2.0;
    for (int i = 0; i < 100; ++i) {
        const double theta = mu + 0.01 + (20.0 - 0.01) * i / 99.0;
        const double x = x_theta_of(mu, theta);
        CHECK(x < prev);
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        prev = x;
    }
    CHECK(x_theta_of(mu, mu + 1e-4) > 0.999);
    CHECK(x_theta_of(mu, mu + 200.0) < 0.01);
}

TEST_CASE("F(z) = G(z) + a_theta z has a double critical point at theta") {
    for (double mu : {1.0, 0.75}) {
        for (double theta : {1.8, 2.5, 4.0}) {
            const ScalingConstants c = scaling_constants(mu, theta);
            CHECK(c.b_theta > 0.0);
            const double h = 1e-4;
            const auto F = [&](double z) { return scaling_G(z, mu, c.x_theta) + c.a_theta * z; };
            const double f1 = (F(theta + h) - F(theta - h)) / (2.0 * h);
            const double f2 = (F(theta + h) - 2.0 * F(theta) + F(theta - h)) / (h * h);
            CHECK(std::abs(f1) < 1e-6);
            CHECK(std::abs(f2) < 1e-6);
        }
    }
}

TEST_CASE("analytic derivatives of G match central differences") {
    const double mu = 1.0, xt = x_theta_of(mu, 2.2);
    const double h = 1e-4;
    for (double z : {1.6, 2.2, 3.0}) {
        const double g1 = (scaling_G(z + h, mu, xt) - scaling_G(z - h, mu, xt)) / (2.0 * h);
        CHECK(scaling_G_deriv(1, z, mu, xt) == doctest::Approx(g1).epsilon(1e-6));
        const double g2 = (scaling_G_deriv(1, z + h, mu, xt) - scaling_G_deriv(1, z - h, mu, xt)) / (2.0 * h);
        CHECK(scaling_G_deriv(2, z, mu, xt) == doctest::Approx(g2).epsilon(1e-6));
        const double g3 = (scaling_G_deriv(2, z + h, mu, xt) - scaling_G_deriv(2, z - h, mu, xt)) / (2.0 * h);
        CHECK(scaling_G_deriv(3, z, mu, xt) == doctest::Approx(g3).epsilon(1e-5));
    }
}

TEST_CASE("b_theta assembles G''' / 2") {
    const ScalingConstants c = scaling_constants(1.0, 2.0);
    const double g3 = scaling_G_deriv(3, 2.0, 1.0, c.x_theta);
    CHECK(c.b_theta == doctest::Approx(std::cbrt(0.5 * g3)).epsilon(1e-12));
    CHECK(c.a_theta == doctest::Approx(-scaling_G_deriv(1, 2.0, 1.0, c.x_theta)).epsilon(1e-12));
}

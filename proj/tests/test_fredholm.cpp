#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include "rwre/cluster.hpp"
#include "rwre/fredholm.hpp"
#include "rwre/specfun.hpp"

using namespace rwre;

namespace {
constexpr double kSqrt2Pi = 2.506628274631000502415765;

std::vector<double> oracle_moments(const Rat& mu, const Rat& eta, int64_t t, int k_max) {
    std::vector<double> out;
    for (int k = 1; k <= k_max; ++k)
        out.push_back(static_cast<double>(
            exact_moment_halfspace(mu, eta, t, std::vector<int64_t>(static_cast<size_t>(k), 1))));
    return out;
}

} // namespace

TEST_CASE("generating series partial sums") {
    const std::vector<double> m{0.75, 11.0 / 18.0};
    const cplx v = generating_series(m, 2.0, cplx(0.5));
    // 1 - 0.5*0.75/2 + 0.25*(11/18)/(2*2*3).
    const double expect = 1.0 - 0.5 * 0.75 / 2.0 + 0.25 * (11.0 / 18.0) / 12.0;
    CHECK(v.real() == doctest::Approx(expect).epsilon(1e-14));
    CHECK(generating_series({}, 2.0, cplx(0.7)) == cplx(1.0));
}

TEST_CASE("series integrals reproduce the oracle moments") {
    // I_k = E[P_{0,T}(1,1)^k] / (mu+eta)_k, term by term.
    for (const auto& [mu, eta] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {0.75, 1.5}}) {
        const ModelParams p{mu, eta};
        const Rat rmu(static_cast<int>(mu * 4), 4), reta(static_cast<int>(eta * 4), 4);
        for (int64_t T : {2, 6}) {
            const std::vector<cplx> ints = fredholm_pfaffian_series_integrals(p, T, 3, 256);
            const std::vector<double> mom = oracle_moments(rmu, reta, T, 3);
            for (int k = 1; k <= 3; ++k) {
                const double expect = mom[static_cast<size_t>(k - 1)] /
                                      pochhammer_real(mu + eta, k);
                CHECK(std::abs(ints[static_cast<size_t>(k - 1)] - expect) <=
                      5e-7 * std::abs(expect));
            }
        }
    }
}

TEST_CASE("series evaluation at zeta = 0 and against the oracle series") {
    const ModelParams p{1.0, 1.0};
    CHECK(fredholm_pfaffian_series(p, 2, cplx(0.0), 4).value == cplx(1.0));
    const std::vector<double> mom = oracle_moments(1, 1, 2, 4);
    for (double z : {-0.5, -0.25, 0.25, 0.5}) {
        const cplx series = fredholm_pfaffian_series(p, 2, cplx(z), 4).value;
        const cplx direct = generating_series(mom, 2.0, cplx(z));
        CHECK(std::abs(series - direct) <= 1e-6);
    }
}

TEST_CASE("discretized Pfaffian matches the series") {
    const ModelParams p{0.75, 1.5};
    for (int64_t T : {2, 6}) {
        for (double z : {-0.3, 0.3}) {
            const cplx series = fredholm_pfaffian_series(p, T, cplx(z), 4).value;
            // Two-row Richardson on the O(h^2) node error of the flat rule.
            const cplx d1 = fredholm_pfaffian_discretized(p, T, cplx(z), 128);
            const cplx d2 = fredholm_pfaffian_discretized(p, T, cplx(z), 256);
            const cplx disc = (4.0 * d2 - d1) / 3.0;
            CHECK(std::abs(disc - series) <= 2e-6);
        }
        CHECK(std::abs(fredholm_pfaffian_discretized(p, T, cplx(0.0), 64) - 1.0) < 1e-12);
    }
}

TEST_CASE("scaled large-time limit of the Pfaffian (half-space)") {
    // With zeta = zt * sqrt(T) the series converges to exp(-zt 2/(mu sqrt(2pi)));
    // the sqrt(T) scaling absorbs the even-time lattice parity factor.
    const ModelParams p{1.0, 1.0};
    const int64_t T = 2000;
    for (double zt : {0.05, 0.1}) {
        const cplx v = fredholm_pfaffian_series(p, T, cplx(zt * std::sqrt(static_cast<double>(T))), 4).value;
        const double target = std::exp(-zt * 2.0 / kSqrt2Pi);
        CHECK(std::abs(v - target) <= 1e-3);
    }
}

TEST_CASE("full-space Fredholm determinant") {
    const FullParams p{1.0, 1.0};
    CHECK(std::abs(fredholm_determinant_fullspace(p, 4, 0, cplx(0.0), 64) - 1.0) < 1e-12);
    // Small t against the oracle generating series (det convention:
    // E[F_{a+b}(zeta P^Z(x,0))] = det(I + zeta L)).
    std::vector<double> mom;
    for (int k = 1; k <= 4; ++k)
        mom.push_back(static_cast<double>(
            exact_moment_fullspace(1, 1, 4, std::vector<int64_t>(static_cast<size_t>(k), 0))));
    for (double z : {-0.3, 0.4}) {
        const cplx det = fredholm_determinant_fullspace(p, 4, 0, cplx(z), 256);
        const cplx series = generating_series(mom, 2.0, cplx(-z));
        CHECK(std::abs(det - series) <= 1e-5);
    }
    // Scaled limit at t=2000: det -> exp(zt g_sigma(0)/2) for zeta = zt sqrt(t)/2.
    for (double zt : {0.05, 0.1}) {
        const cplx d = fredholm_determinant_fullspace(p, 2000, 0, cplx(zt * std::sqrt(2000.0) / 2.0), 400);
        const double target = std::exp(zt / (2.0 * kSqrt2Pi));
        CHECK(std::abs(d - target) <= 1e-3);
    }
    CHECK_THROWS_AS(fredholm_determinant_fullspace(p, 3, 0, cplx(0.1), 64),
                    std::invalid_argument);
}

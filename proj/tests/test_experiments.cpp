#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include "rwre/experiments.hpp"
#include "rwre/sampling.hpp"

using namespace rwre;

TEST_CASE("KS instrument: calibration, degenerate input, power") {
    // Type-I error at the 1% threshold over 500 null resamples.
    int rejections = 0;
    for (int rep = 0; rep < 500; ++rep) {
        std::vector<double> s(200);
        for (int i = 0; i < 200; ++i) {
            PhiloxStream st(1000u + rep, 0, 0, static_cast<uint32_t>(i), 3);
            s[static_cast<size_t>(i)] = gamma_draw(2.0, st);
        }
        const GammaLaw law{2.0, 1.0};
        if (ks_test(s, [law](double x) { return law.cdf(x); }).p_value < 0.01) ++rejections;
    }
    CHECK(rejections <= 10);   // <= 2% of 500

    // Degenerate (constant) samples are rejected outright.
    const GammaLaw law{2.0, 1.0};
    CHECK_THROWS_AS(ks_test(std::vector<double>(60, 2.0),
                            [law](double x) { return law.cdf(x); }),
                    std::invalid_argument);

    // Power: a 0.5 shift is rejected decisively at n = 10^4.
    std::vector<double> shifted(10000);
    for (int i = 0; i < 10000; ++i) {
        PhiloxStream st(5u, 0, 0, static_cast<uint32_t>(i), 3);
        shifted[static_cast<size_t>(i)] = gamma_draw(2.0, st) + 0.5;
    }
    CHECK(ks_test(shifted, [law](double x) { return law.cdf(x); }).p_value < 1e-6);

    // Two-sample: same law passes, shifted law fails.
    std::vector<double> a(2000), b(2000);
    for (int i = 0; i < 2000; ++i) {
        PhiloxStream s1(6u, 0, 0, static_cast<uint32_t>(i), 3);
        PhiloxStream s2(7u, 0, 0, static_cast<uint32_t>(i), 3);
        a[static_cast<size_t>(i)] = gamma_draw(2.0, s1);
        b[static_cast<size_t>(i)] = gamma_draw(2.0, s2);
    }
    CHECK(ks_two_sample(a, b).p_value > 0.01);
}

TEST_CASE("half-space LLT report at moderate t") {
    const ModelParams p{1.0, 1.0};
    const LltHalfReport r = llt_halfspace(p, 200, 200, 11u);
    CHECK(r.hypothesis_ok);
    CHECK(r.ks11.p_value > 0.01);
    CHECK(r.ks00.p_value > 0.01);
    CHECK(r.ks3_vs_1.p_value > 0.01);   // Remark-style consistency across starts
    CHECK(r.mean_target == doctest::Approx(2.0));
    CHECK(std::abs(r.mean_norm.mean - r.mean_target) <= 4.0 * r.mean_norm.se);
    // Deterministic rerun.
    const LltHalfReport r2 = llt_halfspace(p, 200, 200, 11u);
    CHECK(r2.s11 == r.s11);
    CHECK(r2.ks11.statistic == r.ks11.statistic);
    CHECK_THROWS_AS(llt_halfspace(p, 201, 200, 1u), std::invalid_argument);
}

TEST_CASE("full-space LLT report and parity rounding") {
    const FullParams p{1.0, 1.0};
    const LltFullReport r = llt_fullspace(p, 200, 0.0, 200, 13u);
    CHECK(((r.x_used + 200) % 2) == 0);
    CHECK(r.ks.p_value > 0.01);
    CHECK(std::abs(r.mean.mean - r.target_mean) <= 4.0 * r.mean.se);
    // x_tilde = 3 sigma: mean suppressed by the Gaussian factor.
    const LltFullReport r3 = llt_fullspace(p, 200, 3.0, 200, 13u);
    CHECK(r3.target_mean < 0.02 * r.target_mean);   // e^{-4.5} ~ 0.011
    CHECK(std::abs(r3.mean.mean - r3.target_mean) <= 4.0 * r3.mean.se + 1e-3);
}

TEST_CASE("conjectured Z laws and the closure calibration") {
    CHECK(z_half_law(ModelParams{1.0, 1.0}, 0).mean() == doctest::Approx(0.5));
    CHECK(z_half_law(ModelParams{1.0, 1.0}, 1).mean() == doctest::Approx(1.0));
    CHECK(z_half_law(ModelParams{1.0, 1.0}, 4).mean() == doctest::Approx(1.0));
    CHECK(z_half_law(ModelParams{0.75, 1.5}, 0).mean() == doctest::Approx(1.5 / 1.5));

    const KSReport bg = beta_gamma_closure(FullParams{1.0, 1.0}, 100000, 2u);
    CHECK(bg.p_value > 0.01);
    const KSReport bg2 = beta_gamma_closure(FullParams{2.0, 0.5}, 100000, 2u);
    CHECK(bg2.p_value > 0.01);

    const ZConjReport zr = z_conjecture_halfspace(ModelParams{1.0, 1.0}, 64, 64, {0, 1, 3}, 120, 5u);
    CHECK(zr.conjecture);
    REQUIRE(zr.means.size() == 3);
    for (size_t i = 0; i < 3; ++i)
        CHECK(std::abs(zr.means[i].mean - zr.target_means[i]) <= 6.0 * zr.means[i].se);
}

TEST_CASE("coalescence decay diagnostic") {
    const CoalescenceReport r =
        coalescence_experiment(ModelParams{1.0, 1.0}, {50, 100, 200, 400}, 3, 150, 9u);
    REQUIRE(r.values.size() == 4);
    for (double v : r.values) CHECK(v >= 0.0);
    CHECK(r.trend > 0.0);   // shrinking in t on a geometric ladder
    CHECK_THROWS_AS((coalescence_experiment(ModelParams{1.0, 1.0}, {50}, 2, 100, 9u)),
                    std::invalid_argument);
}

TEST_CASE("gaussian density helper") {
    const double g0 = gaussian_density(1.0, 0.0);
    CHECK(g0 == doctest::Approx(1.0 / std::sqrt(2.0 * 3.14159265358979323846)).epsilon(1e-14));
    CHECK(gaussian_density(2.0, 0.0) == doctest::Approx(0.5 * g0));
}

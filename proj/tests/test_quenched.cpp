#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include "rwre/quenched.hpp"

using namespace rwre;

TEST_CASE("zero-step and one-step kernels") {
    const Environment env(ModelParams{1.0, 1.0}, 11u);
    const KernelSlice id = backward_kernel(env, 3, 3, 4);
    CHECK(id.at(4) == doctest::Approx(1.0));
    CHECK(id.at(3) == doctest::Approx(0.0));
    CHECK(id.at(5) == doctest::Approx(0.0));
    // Forced boundary step: P_{0,1}(0,1) = 1.
    const KernelSlice one = backward_kernel(env, 0, 1, 1);
    CHECK(one.at(0) == doctest::Approx(1.0));
    // One bulk step: P_{0,1}(2,1) = 1 - W_{0,2}.
    CHECK(one.at(2) == doctest::Approx(1.0 - env.weight(0, 2)));
}

TEST_CASE("quenched kernel conserves mass and respects parity") {
    const Environment env(ModelParams{0.75, 1.5}, 3u, 2u);
    const int64_t t = 8;
    // Sum over endpoints y of P_{0,t}(x,y) = 1 for each start x.
    for (int64_t x : {1, 2, 5}) {
        double total = 0.0;
        for (int64_t y = 0; y <= x + t; ++y) {
            if (!kernel_parity_ok(0, t, x, y)) continue;
            total += backward_kernel(env, 0, t, y).at(x);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
    // Off-parity entries vanish identically.
    const KernelSlice s = backward_kernel(env, 0, t, 1);
    CHECK(s.at(2) == 0.0);
    CHECK(s.at(4) == 0.0);
}

TEST_CASE("averaged return probability matches the path enumeration anchor") {
    // E[P_{0,2}(1,1)] = 3/4 at mu=eta=1 (paths 1->0->1 forced and 1->2->1).
    const int n = 20000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const Environment env(ModelParams{1.0, 1.0}, 77u, static_cast<uint32_t>(i));
        s += backward_kernel(env, 0, 2, 1).at(1);
    }
    const double mean = s / n;
    // sd of P_{0,2}(1,1) is < 0.25, so 4 s.e. < 0.008.
    CHECK(mean == doctest::Approx(0.75).epsilon(0.012));
}

TEST_CASE("full-space kernel: symmetric environment, exact two-step value") {
    const Environment env(FullParams{1.0, 1.0}, 5u);
    const KernelSlice s = backward_kernel(env, 0, 2, 0);
    // P_{0,2}(0,0) = W_{0,0}(1-W_{1,1}) + (1-W_{0,0}) W_{1,-1}.
    const double expect = env.weight(0, 0) * (1.0 - env.weight(1, 1)) +
                          (1.0 - env.weight(0, 0)) * env.weight(1, -1);
    CHECK(s.at(0) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("z functional: truncation ladder and normalization") {
    // L=1: a single backward step, so Z = W_{t-1,x-1} + (1 - W_{t-1,x+1}).
    const Environment env(ModelParams{1.0, 1.0}, 13u);
    const ZSample z1 = z_functional(env, 10, 3, 1);
    CHECK(z1.value() ==
          doctest::Approx(env.weight(9, 2) + 1.0 - env.weight(9, 4)).epsilon(1e-14));
    CHECK_THROWS_AS(z_functional(env, 10, 3, 0), std::invalid_argument);

    // Full-space: E[Z^Z_t(x)] = 1 (each truncation is a kernel column sum
    // whose mean telescopes to 1).
    const int n = 4000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const Environment e(FullParams{1.0, 1.0}, 21u, static_cast<uint32_t>(i));
        const ZSample z = z_functional(e, 64, 0, 64);
        CHECK(z.ladder_value.size() == z.ladder_L.size());
        s += z.value();
    }
    CHECK(s / n == doctest::Approx(1.0).epsilon(0.06));   // ~4 s.e. at Gamma(2)/2 variance
}

TEST_CASE("coalescence gap") {
    const Environment env(ModelParams{1.0, 1.0}, 31u);
    CHECK_THROWS_AS(coalescence_gap(env, 20, 1), std::invalid_argument);
    const KernelSlice s = backward_kernel(env, 0, 20, 1);
    // Off-parity x: P_{0,t}(x,1) = 0, so the gap degenerates to P_{0,t}(1,1).
    CHECK(coalescence_gap(env, 20, 2) == doctest::Approx(s.at(1)).epsilon(1e-14));
    const double g = coalescence_gap(env, 20, 3);
    CHECK(g == doctest::Approx(std::abs(s.at(1) - s.at(3))).epsilon(1e-14));
}

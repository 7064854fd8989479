#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include "rwre/environment.hpp"
#include "rwre/params.hpp"

using namespace rwre;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((ModelParams{-1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ModelParams{1.0, 0.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((FullParams{0.0, 1.0}.validate()), std::invalid_argument);
    CHECK_NOTHROW(ModelParams{0.75, 1.5}.validate());
    const FullParams fp{1.0, 3.0};
    CHECK(fp.sigma2() == doctest::Approx(12.0 / 16.0));
    CHECK(fp.drift() == doctest::Approx(-0.5));
}

TEST_CASE("lattice parity helpers") {
    CHECK(HalfLatticePoint{2, 1}.valid());
    CHECK(HalfLatticePoint{3, 2}.valid());
    CHECK_FALSE(HalfLatticePoint{2, 2}.valid());
    CHECK_FALSE(HalfLatticePoint{2, -1}.valid());
    CHECK(kernel_parity_ok(0, 2, 1, 1));
    CHECK_FALSE(kernel_parity_ok(0, 3, 1, 1));
    CHECK_FALSE(kernel_parity_ok(4, 2, 1, 1));   // s > t
}

TEST_CASE("averaged one-step law") {
    const StepLaw boundary = averaged_step_law({1.0, 1.0}, 1);
    CHECK(boundary.p_up == doctest::Approx(0.5));
    CHECK(boundary.p_down == doctest::Approx(0.5));
    const StepLaw forced = averaged_step_law({0.3, 2.0}, 0);
    CHECK(forced.p_up == doctest::Approx(1.0));
    CHECK(forced.p_down == doctest::Approx(0.0));
    const StepLaw skew = averaged_step_law({2.0, 1.0}, 1);
    CHECK(skew.p_up == doctest::Approx(2.0 / 3.0));
    CHECK(skew.p_down == doctest::Approx(1.0 / 3.0));
    const StepLaw bulk = averaged_step_law({0.75, 1.5}, 7);
    CHECK(bulk.p_up == doctest::Approx(0.5));
}

TEST_CASE("environment weights: determinism and range") {
    const Environment env(ModelParams{1.0, 2.0}, 42u, 3u);
    const Environment env_again(ModelParams{1.0, 2.0}, 42u, 3u);
    const Environment env_other(ModelParams{1.0, 2.0}, 42u, 4u);
    bool any_diff = false;
    for (int64_t t = 0; t < 20; ++t)
        for (int64_t x = 1; x < 20; ++x) {
            const double w = env.weight(t, x);
            CHECK(w > 0.0);
            CHECK(w < 1.0);
            CHECK(env_again.weight(t, x) == w);
            any_diff = any_diff || (env_other.weight(t, x) != w);
        }
    CHECK(any_diff);   // different replica, different field
}

TEST_CASE("environment weights: Beta moments") {
    const int n = 200000;
    // Half-space, mu=eta=1: every column uniform; check mean at the boundary
    // column and in the bulk.
    {
        const Environment env(ModelParams{1.0, 1.0}, 7u);
        double s1 = 0.0, s2 = 0.0;
        for (int i = 0; i < n; ++i) {
            s1 += env.weight(i, 1);
            s2 += env.weight(i, 5);
        }
        CHECK(s1 / n == doctest::Approx(0.5).epsilon(0.006));
        CHECK(s2 / n == doctest::Approx(0.5).epsilon(0.006));
    }
    // Boundary Beta(mu=2, eta=1): mean 2/3.
    {
        const Environment env(ModelParams{2.0, 1.0}, 8u);
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += env.weight(i, 1);
        CHECK(s / n == doctest::Approx(2.0 / 3.0).epsilon(0.005));
    }
    // Full-space Beta(1/2,1/2): variance 1/8.
    {
        const Environment env(FullParams{0.5, 0.5}, 9u);
        double s = 0.0, ss = 0.0;
        for (int i = 0; i < n; ++i) {
            const double w = env.weight(i, -3);
            s += w;
            ss += w * w;
        }
        const double mean = s / n;
        CHECK(ss / n - mean * mean == doctest::Approx(0.125).epsilon(0.02));
    }
}

TEST_CASE("environment snapshot round trip") {
    const Environment env(ModelParams{0.75, 1.5}, 123u, 1u);
    EnvWindow w;
    w.t_min = 0; w.t_max = 6; w.x_min = 1; w.x_max = 9;
    const EnvSnapshot snap = snapshot_environment(env, w);
    REQUIRE(snap.weights.size() == static_cast<size_t>(w.n_t() * w.n_x()));
    for (int64_t t = w.t_min; t <= w.t_max; ++t)
        for (int64_t x = w.x_min; x <= w.x_max; ++x)
            CHECK(snap.at(t, x) == env.weight(t, x));

    const std::string path = "/tmp/rwre_test_env_snapshot.bin";
    write_env_snapshot(snap, path);
    const EnvSnapshot back = read_env_snapshot(path);
    std::remove(path.c_str());
    CHECK(back.mode == snap.mode);
    CHECK(back.param1 == snap.param1);
    CHECK(back.param2 == snap.param2);
    CHECK(back.seed == snap.seed);
    CHECK(back.replica == snap.replica);
    REQUIRE(back.weights.size() == snap.weights.size());
    for (size_t i = 0; i < snap.weights.size(); ++i)
        CHECK(back.weights[i] == snap.weights[i]);   // byte-exact replay
}

TEST_CASE("philox streams: tag separation and block refill") {
    PhiloxStream a(5u, 2, 3, 0, 1), b(5u, 2, 3, 0, 2);
    bool differ = false;
    for (int i = 0; i < 16; ++i) differ = differ || (a.next_u32() != b.next_u32());
    CHECK(differ);
    PhiloxStream c(5u, 2, 3, 0, 1), d(5u, 2, 3, 0, 1);
    for (int i = 0; i < 100; ++i) CHECK(c.next_u01() == d.next_u01());
    CHECK(splitmix64(0) != 0);
    CHECK(splitmix64(1) != splitmix64(2));
}

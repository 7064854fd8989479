#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include "rwre/cluster.hpp"

using namespace rwre;

TEST_CASE("cluster transition weights") {
    // c=2 at the boundary column, mu=eta=1: j in {0,1,2} each 1/3.
    const std::vector<Rat> b = cluster_transition_halfspace(2, 1, 1, 1);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == Rat(1, 3));
    CHECK(b[1] == Rat(1, 3));
    CHECK(b[2] == Rat(1, 3));
    // c=1 in the bulk: symmetric Beta mean 1/2.
    const std::vector<Rat> bulk = cluster_transition_halfspace(1, 4, Rat(3, 4), Rat(3, 2));
    REQUIRE(bulk.size() == 2);
    CHECK(bulk[1] == Rat(1, 2));
    // Forced site 0: everybody up.
    const std::vector<Rat> forced = cluster_transition_halfspace(3, 0, 1, 2);
    CHECK(forced[0] == 1);
    // Normalization, including full-space.
    for (int c = 1; c <= 4; ++c) {
        Rat sh = 0, sf = 0;
        for (const Rat& v : cluster_transition_halfspace(c, 1, Rat(3, 4), Rat(3, 2))) sh += v;
        for (const Rat& v : cluster_transition_fullspace(c, Rat(1, 2), Rat(5, 2))) sf += v;
        CHECK(sh == 1);
        CHECK(sf == 1);
    }
}

TEST_CASE("exact half-space moments: paper-grade anchors") {
    CHECK(exact_moment_halfspace(1, 1, 0, {1}) == 1);                  // zero steps
    CHECK(exact_moment_halfspace(1, 1, 2, {1}) == Rat(3, 4));
    CHECK(exact_moment_halfspace(1, 1, 3, {2}) == Rat(1, 2));
    CHECK(exact_moment_halfspace(1, 1, 2, {1, 1}) == Rat(11, 18));
    // Wrong parity rejected.
    CHECK_THROWS_AS((exact_moment_halfspace(1, 1, 2, {2})), std::invalid_argument);
}

TEST_CASE("exact k=1 equals the averaged-walk probability") {
    const ModelParams p{0.75, 1.5};
    for (int64_t t = 1; t <= 7; ++t)
        for (int64_t x = 1; x <= t + 1; x += 2) {
            if (!kernel_parity_ok(0, t, x, 1)) continue;
            const Rat ex = exact_moment_halfspace(Rat(3, 4), Rat(3, 2), t, {x});
            const double avg = averaged_walk_probability(p, t, x, 1);
            CHECK(static_cast<double>(ex) == doctest::Approx(avg).epsilon(1e-13));
        }
}

TEST_CASE("exact full-space moments") {
    CHECK(exact_moment_fullspace(1, 1, 2, {0}) == Rat(1, 2));
    CHECK(exact_moment_fullspace(1, 1, 2, {2}) == Rat(1, 4));
    // Drifted walk, k=1, one step: P^Z_{0,1}(1,0) = 1 - W, mean beta/(a+b).
    CHECK(exact_moment_fullspace(1, 3, 1, {1}) == Rat(3, 4));
    // k=2 second moment of a one-step kernel: E[(1-W)^2] = (b)_2/((a+b))_2.
    CHECK(exact_moment_fullspace(1, 3, 1, {1, 1}) == Rat(3 * 4, 4 * 5));
}

TEST_CASE("Monte Carlo moments agree with the exact oracle") {
    const uint64_t reps = 40000;
    {
        const MCMoment mc = mc_moment(ModelParams{1.0, 1.0}, 2, {1}, reps, 99u);
        CHECK(std::abs(mc.value - 0.75) <= 4.0 * mc.stderr_);
        CHECK(mc.stderr_ > 0.0);
    }
    {
        const MCMoment mc = mc_moment(ModelParams{0.75, 1.5}, 4, {1, 1, 3}, reps, 100u);
        const double exact =
            static_cast<double>(exact_moment_halfspace(Rat(3, 4), Rat(3, 2), 4, {1, 1, 3}));
        CHECK(std::abs(mc.value - exact) <= 4.0 * mc.stderr_);
    }
    {
        const MCMoment mc = mc_moment_fullspace(FullParams{1.0, 1.0}, 4, {0, 2}, reps, 101u);
        const double exact = static_cast<double>(exact_moment_fullspace(1, 1, 4, {0, 2}));
        CHECK(std::abs(mc.value - exact) <= 4.0 * mc.stderr_);
    }
    // Determinism: same seed, same estimate.
    const MCMoment a = mc_moment(ModelParams{1.0, 1.0}, 4, {1}, 2000, 7u);
    const MCMoment b = mc_moment(ModelParams{1.0, 1.0}, 4, {1}, 2000, 7u);
    CHECK(a.value == b.value);
    CHECK(a.stderr_ == b.stderr_);
}

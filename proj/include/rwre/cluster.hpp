// cluster.hpp
// Annealed mixed moments E[prod_i P_{0,t}(x_i, 1)] via the exact cluster
// Markov chain: k walkers sharing an environment move, once the environment
// is averaged, by exchangeable cluster steps whose weights are Beta-moment
// ratios. Exact rationals when parameters are rational; Monte Carlo
// cross-check via the quenched kernel.
#pragma once

#include <cstdint>
#include <vector>
#include "rwre/params.hpp"
#include "rwre/rational.hpp"

namespace rwre {

// Distribution of "j of c walkers step down" for one cluster at site `pos`.
// Half-space: pos>=2 uses Beta(mu,mu) moments, pos==1 uses Beta(mu,eta)
// boundary moments (j walkers to 0), pos==0 is the forced step (all to 1).
// Weights sum to 1 exactly.
std::vector<Rat> cluster_transition_halfspace(int c, int64_t pos, const Rat& mu, const Rat& eta);
// Full-space: every site uses Beta(alpha,beta) moments.
std::vector<Rat> cluster_transition_fullspace(int c, const Rat& alpha, const Rat& beta);

// Exact annealed moment E[prod_i P_{0,t}(x_i,1)] (half-space; target site 1).
// Requires t + x_i odd for all i and 1 <= k <= 6.
Rat exact_moment_halfspace(const Rat& mu, const Rat& eta, int64_t t, std::vector<int64_t> xs);

// Exact full-space moment E[prod_i P^Z_{0,t}(x_i,0)] (target site 0);
// requires t + x_i even.
Rat exact_moment_fullspace(const Rat& alpha, const Rat& beta, int64_t t, std::vector<int64_t> xs);

// Averaged (annealed k=1) walk probability P(X_t = y | X_0 = x) of the
// half-space averaged walk of Remark 1.3-type dynamics.
double averaged_walk_probability(const ModelParams& p, int64_t t, int64_t x, int64_t y);

// Monte Carlo estimate of the same mixed moment via quenched kernels.
struct MCMoment {
    double value = 0.0;
    double stderr_ = 0.0;
    uint64_t replicas = 0;
};
MCMoment mc_moment(const ModelParams& p, int64_t t, const std::vector<int64_t>& xs,
                   uint64_t replicas, uint64_t seed);
MCMoment mc_moment_fullspace(const FullParams& p, int64_t t, const std::vector<int64_t>& xs,
                             uint64_t replicas, uint64_t seed);

} // namespace rwre

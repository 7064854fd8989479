// environment.hpp
// The random environment: a reproducible field of Beta-distributed up-step
// probabilities W_{t,x}. Weights are materialized lazily — weight(t,x) is a
// pure function of (seed, replica, t, x, params) — and can be snapshot to a
// documented little-endian binary layout for replay.
#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include "rwre/params.hpp"
#include "rwre/philox.hpp"
#include "rwre/sampling.hpp"

namespace rwre {

enum class EnvMode : uint32_t { HalfSpace = 0, FullSpace = 1 };

// Space-time window of materialized weights (inclusive bounds).
struct EnvWindow {
    int64_t t_min = 0, t_max = 0;
    int64_t x_min = 1, x_max = 0;
    bool valid() const { return t_max >= t_min && x_max >= x_min; }
    int64_t n_t() const { return t_max - t_min + 1; }
    int64_t n_x() const { return x_max - x_min + 1; }
};

class Environment {
public:
    // Half-space: bulk Beta(mu,mu), boundary column x=1 Beta(mu,eta); x >= 1.
    Environment(const ModelParams& p, uint64_t seed, uint32_t replica = 0)
        : mode_(EnvMode::HalfSpace), a_(p.mu), b_(p.eta), seed_(seed), replica_(replica) {
        p.validate();
    }
    // Full-space: Beta(alpha,beta) at every site of Z.
    Environment(const FullParams& p, uint64_t seed, uint32_t replica = 0)
        : mode_(EnvMode::FullSpace), a_(p.alpha), b_(p.beta), seed_(seed), replica_(replica) {
        p.validate();
    }

    EnvMode mode() const { return mode_; }
    uint64_t seed() const { return seed_; }
    uint32_t replica() const { return replica_; }
    double param1() const { return a_; }
    double param2() const { return b_; }

    // Up-step probability W_{t,x} in (0,1). Pure in (seed, replica, t, x).
    double weight(int64_t t, int64_t x) const {
        PhiloxStream s(seed_, t, x, replica_, /*tag=*/1);
        if (mode_ == EnvMode::HalfSpace) {
            // x = 1 is the boundary column; x >= 2 is the bulk.
            return (x == 1) ? beta_draw(a_, b_, s) : beta_draw(a_, a_, s);
        }
        return beta_draw(a_, b_, s);
    }

private:
    EnvMode mode_;
    double a_, b_;        // (mu, eta) or (alpha, beta)
    uint64_t seed_;
    uint32_t replica_;
};

// sample_environment: spec-facing constructor names.
inline Environment sample_environment(const ModelParams& p, uint64_t seed, uint32_t replica = 0) {
    return Environment(p, seed, replica);
}
inline Environment sample_environment(const FullParams& p, uint64_t seed, uint32_t replica = 0) {
    return Environment(p, seed, replica);
}

// ---------------------- Binary snapshot format ----------------------
// Layout (all little-endian):
//   bytes 0..7   magic "RWREENV\0"
//   u32 version (=1), u32 mode (0 half-space, 1 full-space)
//   f64 param1, f64 param2      ((mu,eta) or (alpha,beta))
//   u64 seed, u32 replica, u32 reserved(=0)
//   i64 t_min, i64 t_max, i64 x_min, i64 x_max
//   n_t * n_x f64 weights, t-major then x ascending
struct EnvSnapshot {
    uint32_t mode = 0;
    double param1 = 0, param2 = 0;
    uint64_t seed = 0;
    uint32_t replica = 0;
    EnvWindow window;
    std::vector<double> weights;   // row-major (t, x)

    double at(int64_t t, int64_t x) const {
        return weights[static_cast<size_t>((t - window.t_min) * window.n_x() + (x - window.x_min))];
    }
};

// Materialize a window of an environment into a snapshot.
EnvSnapshot snapshot_environment(const Environment& env, const EnvWindow& window);

// Serialize / parse the documented binary layout.
void write_env_snapshot(const EnvSnapshot& snap, const std::string& path);
EnvSnapshot read_env_snapshot(const std::string& path);

} // namespace rwre

// cluster.cpp — exact cluster-chain oracle and Monte Carlo moments.
#include "rwre/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include "rwre/quenched.hpp"

namespace rwre {

namespace {

// Exchangeable cluster step law: weight of "j of c go down" equals
// binom(c,j) (b)_j (a)_{c-j} / (a+b)_c = binom(c,j) E[(1-W)^j W^{c-j}]
// for up-probability W ~ Beta(a,b).
std::vector<Rat> beta_moment_weights(int c, const Rat& a, const Rat& b) {
    std::vector<Rat> w(static_cast<size_t>(c) + 1);
    const Rat denom = rat_pochhammer(a + b, c);
    for (int j = 0; j <= c; ++j)
        w[static_cast<size_t>(j)] =
            rat_binomial(c, j) * rat_pochhammer(b, j) * rat_pochhammer(a, c - j) / denom;
    return w;
}

using State = std::vector<int64_t>;   // sorted positions
using Dist = std::map<State, Rat>;

// One cluster-chain step for a sorted state; `half` toggles the boundary
// rules at sites 1 and 0.
void step_state(const State& st, const Rat& mass, bool half,
                const Rat& p1, const Rat& p2, Dist& out) {
    // Decompose into clusters of equal positions.
    struct Cluster { int64_t pos; int c; };
    std::vector<Cluster> clusters;
    for (size_t i = 0; i < st.size();) {
        size_t j = i;
        while (j < st.size() && st[j] == st[i]) ++j;
        clusters.push_back({st[i], static_cast<int>(j - i)});
        i = j;
    }
    // Per-cluster outcome lists: (new positions contribution, weight).
    struct Outcome { std::vector<int64_t> pos; Rat w; };
    std::vector<std::vector<Outcome>> options(clusters.size());
    for (size_t ci = 0; ci < clusters.size(); ++ci) {
        const auto [pos, c] = clusters[ci];
        if (half && pos == 0) {
            options[ci].push_back({std::vector<int64_t>(static_cast<size_t>(c), 1), Rat(1)});
            continue;
        }
        std::vector<Rat> w;
        int64_t down_to, up_to;
        if (half && pos == 1) {
            w = cluster_transition_halfspace(c, pos, p1, p2);
            down_to = 0; up_to = 2;
        } else if (half) {
            w = cluster_transition_halfspace(c, pos, p1, p2);
            down_to = pos - 1; up_to = pos + 1;
        } else {
            w = cluster_transition_fullspace(c, p1, p2);
            down_to = pos - 1; up_to = pos + 1;
        }
        for (int j = 0; j <= c; ++j) {
            if (w[static_cast<size_t>(j)] == 0) continue;
            std::vector<int64_t> np;
            np.insert(np.end(), static_cast<size_t>(j), down_to);
            np.insert(np.end(), static_cast<size_t>(c - j), up_to);
            options[ci].push_back({std::move(np), w[static_cast<size_t>(j)]});
        }
    }
    // Cartesian product over clusters.
    std::vector<size_t> idx(clusters.size(), 0);
    for (;;) {
        State ns;
        Rat w = mass;
        for (size_t ci = 0; ci < clusters.size(); ++ci) {
            const Outcome& o = options[ci][idx[ci]];
            ns.insert(ns.end(), o.pos.begin(), o.pos.end());
            w *= o.w;
        }
        std::sort(ns.begin(), ns.end());
        out[ns] += w;
        size_t ci = 0;
        while (ci < clusters.size() && ++idx[ci] == options[ci].size()) {
            idx[ci] = 0;
            ++ci;
        }
        if (ci == clusters.size()) break;
    }
}

Rat run_chain(bool half, const Rat& p1, const Rat& p2, int64_t t, State xs, int64_t target) {
    std::sort(xs.begin(), xs.end());
    Dist dist;
    dist[xs] = 1;
    for (int64_t step = 0; step < t; ++step) {
        Dist next;
        for (const auto& [st, mass] : dist) step_state(st, mass, half, p1, p2, next);
        dist.swap(next);
    }
    const State goal(xs.size(), target);
    const auto it = dist.find(goal);
    return it == dist.end() ? Rat(0) : it->second;
}

} // namespace

std::vector<Rat> cluster_transition_halfspace(int c, int64_t pos, const Rat& mu, const Rat& eta) {
    if (c < 1) throw std::invalid_argument("cluster_transition: need c >= 1");
    if (pos >= 2) return beta_moment_weights(c, mu, mu);
    if (pos == 1) return beta_moment_weights(c, mu, eta);
    // pos == 0: deterministic up-step; "0 walkers go down" carries all mass.
    std::vector<Rat> w(static_cast<size_t>(c) + 1, Rat(0));
    w[0] = 1;
    return w;
}

std::vector<Rat> cluster_transition_fullspace(int c, const Rat& alpha, const Rat& beta) {
    if (c < 1) throw std::invalid_argument("cluster_transition: need c >= 1");
    return beta_moment_weights(c, alpha, beta);
}

Rat exact_moment_halfspace(const Rat& mu, const Rat& eta, int64_t t, std::vector<int64_t> xs) {
    if (xs.empty() || xs.size() > 6)
        throw std::invalid_argument("exact_moment: k must be in 1..6");
    for (int64_t x : xs) {
        if (x < 0) throw std::invalid_argument("exact_moment: x must be >= 0");
        if ((((t + x) % 2) + 2) % 2 != 1)
            throw std::invalid_argument("exact_moment: parity violation (t + x must be odd)");
    }
    return run_chain(true, mu, eta, t, std::move(xs), /*target=*/1);
}

Rat exact_moment_fullspace(const Rat& alpha, const Rat& beta, int64_t t, std::vector<int64_t> xs) {
    if (xs.empty() || xs.size() > 6)
        throw std::invalid_argument("exact_moment: k must be in 1..6");
    for (int64_t x : xs)
        if ((((t + x) % 2) + 2) % 2 != 0)
            throw std::invalid_argument("exact_moment: parity violation (t + x must be even)");
    return run_chain(false, alpha, beta, t, std::move(xs), /*target=*/0);
}

double averaged_walk_probability(const ModelParams& p, int64_t t, int64_t x, int64_t y) {
    if (x < 0 || y < 0 || t < 0) throw std::invalid_argument("averaged_walk_probability: bad args");
    const int64_t hi = std::max(x, y) + t + 1;
    std::vector<double> cur(static_cast<size_t>(hi) + 2, 0.0), next(cur);
    cur[static_cast<size_t>(x)] = 1.0;
    for (int64_t s = 0; s < t; ++s) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int64_t z = 0; z <= hi; ++z) {
            const double m = cur[static_cast<size_t>(z)];
            if (m == 0.0) continue;
            const StepLaw law = averaged_step_law(p, z);
            if (z + 1 <= hi + 1) next[static_cast<size_t>(z + 1)] += m * law.p_up;
            if (z >= 1) next[static_cast<size_t>(z - 1)] += m * law.p_down;
        }
        cur.swap(next);
    }
    return cur[static_cast<size_t>(y)];
}

namespace {

template <typename EnvMaker>
MCMoment mc_moment_impl(EnvMaker make_env, int64_t t, const std::vector<int64_t>& xs,
                        uint64_t replicas, int64_t y_star) {
    if (replicas == 0) throw std::invalid_argument("mc_moment: need replicas >= 1");
    std::vector<double> prod(replicas);
    // Replica-parallel; the reduction below runs in fixed replica order so the
    // result is identical for any thread count (serial reference = 1 thread).
#pragma omp parallel for schedule(static)
    for (int64_t r = 0; r < static_cast<int64_t>(replicas); ++r) {
        const Environment env = make_env(static_cast<uint32_t>(r));
        const KernelSlice slice = backward_kernel(env, 0, t, y_star);
        double v = 1.0;
        for (int64_t x : xs) v *= slice.at(x);
        prod[static_cast<size_t>(r)] = v;
    }
    double sum = 0.0, sumsq = 0.0;
    for (double v : prod) { sum += v; sumsq += v * v; }
    const double n = static_cast<double>(replicas);
    MCMoment out;
    out.replicas = replicas;
    out.value = sum / n;
    const double var = std::max(0.0, sumsq / n - out.value * out.value);
    out.stderr_ = std::sqrt(var / std::max(1.0, n - 1.0));
    return out;
}

} // namespace

MCMoment mc_moment(const ModelParams& p, int64_t t, const std::vector<int64_t>& xs,
                   uint64_t replicas, uint64_t seed) {
    for (int64_t x : xs)
        if ((((t + x) % 2) + 2) % 2 != 1)
            throw std::invalid_argument("mc_moment: parity violation");
    return mc_moment_impl([&](uint32_t r) { return Environment(p, seed, r); }, t, xs, replicas, 1);
}

MCMoment mc_moment_fullspace(const FullParams& p, int64_t t, const std::vector<int64_t>& xs,
                             uint64_t replicas, uint64_t seed) {
    for (int64_t x : xs)
        if ((((t + x) % 2) + 2) % 2 != 0)
            throw std::invalid_argument("mc_moment: parity violation");
    return mc_moment_impl([&](uint32_t r) { return Environment(p, seed, r); }, t, xs, replicas, 0);
}

} // namespace rwre

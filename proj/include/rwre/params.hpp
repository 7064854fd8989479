// params.hpp
// Model parameter bundles for the half-space and full-space beta RWRE,
// plus the parity-constrained lattice helpers.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace rwre {

// Half-space model: bulk weights Beta(mu,mu), boundary column x=1 Beta(mu,eta).
struct ModelParams {
    double mu  = 1.0;   // bulk Beta shape
    double eta = 1.0;   // boundary Beta shape

    void validate() const {
        if (!(mu > 0.0) || !(eta > 0.0))
            throw std::invalid_argument("ModelParams: mu and eta must be positive");
    }
};

// Full-space model: every weight Beta(alpha,beta); alpha is the up-step shape.
struct FullParams {
    double alpha = 1.0;
    double beta  = 1.0;

    void validate() const {
        if (!(alpha > 0.0) || !(beta > 0.0))
            throw std::invalid_argument("FullParams: alpha and beta must be positive");
    }
    // Variance of the averaged-walk step law, sigma^2 = 4*alpha*beta/(alpha+beta)^2.
    double sigma2() const { return 4.0 * alpha * beta / ((alpha + beta) * (alpha + beta)); }
    // Averaged-walk drift per step, (alpha-beta)/(alpha+beta).
    double drift() const { return (alpha - beta) / (alpha + beta); }
};

// Point of the half-space space-time lattice: t+x odd, x >= 0.
struct HalfLatticePoint {
    long long t = 0;
    long long x = 0;

    bool valid() const { return x >= 0 && (((t + x) % 2 + 2) % 2 == 1); }
};

// Parity admissibility of a kernel entry P_{s,t}(x,y): needs s<=t and
// x+s == y+t (mod 2); the kernel vanishes identically otherwise.
inline bool kernel_parity_ok(long long s, long long t, long long x, long long y) {
    return s <= t && (((x + s) - (y + t)) % 2 == 0);
}

// Averaged (annealed) one-step law of the half-space walk:
// x>=2 -> (1/2,1/2), x=1 -> (mu/(mu+eta), eta/(mu+eta)), x=0 -> (1,0).
struct StepLaw { double p_up, p_down; };
inline StepLaw averaged_step_law(const ModelParams& p, long long x) {
    p.validate();
    if (x < 0) throw std::invalid_argument("averaged_step_law: x must be >= 0");
    if (x == 0) return {1.0, 0.0};
    if (x == 1) return {p.mu / (p.mu + p.eta), p.eta / (p.mu + p.eta)};
    return {0.5, 0.5};
}

} // namespace rwre

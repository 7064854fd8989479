// philox.hpp
// Philox4x32-10 counter-based RNG. The environment is a pure function of
// (seed, t, x, replica): each lattice site owns a stream whose blocks are
// indexed by a draw counter, so weights can be generated in any order,
// from any thread, with bit-identical results.
#pragma once

#include <cstdint>

namespace rwre {

struct PhiloxBlock { uint32_t v[4]; };

// One round-10 Philox4x32 evaluation (constants from the original paper).
inline PhiloxBlock philox4x32(uint32_t c0, uint32_t c1, uint32_t c2, uint32_t c3,
                              uint32_t k0, uint32_t k1) {
    constexpr uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
    constexpr uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        const uint64_t p0 = static_cast<uint64_t>(M0) * c0;
        const uint64_t p1 = static_cast<uint64_t>(M1) * c2;
        const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
        const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
        const uint32_t n0 = hi1 ^ c1 ^ k0;
        const uint32_t n1 = lo1;
        const uint32_t n2 = hi0 ^ c3 ^ k1;
        const uint32_t n3 = lo0;
        c0 = n0; c1 = n1; c2 = n2; c3 = n3;
        k0 += W0; k1 += W1;
    }
    return {{c0, c1, c2, c3}};
}

// Stream of uniforms for one (seed, t, x, replica, tag) coordinate.
// tag separates independent uses at the same site (e.g. different draws).
class PhiloxStream {
public:
    PhiloxStream(uint64_t seed, int64_t t, int64_t x, uint32_t replica, uint32_t tag)
        : k0_(static_cast<uint32_t>(seed)),
          k1_(static_cast<uint32_t>(seed >> 32)),
          c0_(static_cast<uint32_t>(static_cast<uint64_t>(t))),
          c1_(static_cast<uint32_t>(static_cast<uint64_t>(x))),
          c2_(replica) {
        // Fold the high halves of t and x into the tag word so 32-bit
        // collisions between distinct coordinates are impossible in the
        // windows we ever touch (|t|,|x| < 2^31) and unlikely beyond.
        base3_ = (tag << 24) ^ (static_cast<uint32_t>(static_cast<uint64_t>(t) >> 32) << 12)
                             ^ static_cast<uint32_t>(static_cast<uint64_t>(x) >> 32);
    }

    uint32_t next_u32() {
        if (have_ == 0) {
            block_ = philox4x32(c0_, c1_, c2_, base3_ + counter_++, k0_, k1_);
            have_ = 4;
        }
        return block_.v[4 - have_--];
    }

    uint64_t next_u64() {
        const uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform in the open interval (0,1).
    double next_u01() {
        const uint64_t bits = next_u64() >> 11;           // 53 random bits
        double u = static_cast<double>(bits) * 0x1.0p-53;
        if (u <= 0.0) u = 0x1.0p-53;
        return u;
    }

private:
    uint32_t k0_, k1_, c0_, c1_, c2_, base3_;
    uint32_t counter_ = 0;
    PhiloxBlock block_{};
    int have_ = 0;
};

// SplitMix64: used to decorrelate derived seeds (replica sub-seeds, etc.).
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace rwre

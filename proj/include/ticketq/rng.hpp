#pragma once

#include <cmath>
#include <cstdint>

namespace ticketq {

/// splitmix64 mixer, used to spread user seeds and derive per-replication seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d1f2df5c4f604dULL;
    return x ^ (x >> 31);
}

/// Seed for replication `rep` of a base seed. Stable across platforms.
inline std::uint64_t replication_seed(std::uint64_t base, std::uint64_t rep) {
    return mix64(base ^ (0xa0761d6478bd642fULL * (rep + 1)));
}

/// PCG32 (O'Neill). One instance per (seed, stream id); distinct stream ids give
/// statistically independent sequences, which is what keeps the four customer
/// coordinates stable under common random numbers.
class Pcg32 {
public:
    Pcg32() : Pcg32(0, 0) {}
    Pcg32(std::uint64_t seed, std::uint64_t stream) {
        state_ = 0u;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += mix64(seed);
        next_u32();
    }

    std::uint32_t next_u32() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    /// Uniform on the open interval (0,1); exactly one 32-bit word per draw.
    double uniform() {
        return (static_cast<double>(next_u32()) + 0.5) * 0x1p-32;
    }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

/// A PCG32 stream plus a Box-Muller cache, so lognormal draws consume exactly
/// one Gaussian pair-member each.
class Sampler {
public:
    Sampler() = default;
    Sampler(std::uint64_t seed, std::uint64_t stream) : gen_(seed, stream) {}

    double uniform() { return gen_.uniform(); }

    double exponential(double rate) { return -std::log(gen_.uniform()) / rate; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = gen_.uniform();
        double u2 = gen_.uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    Pcg32 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ticketq

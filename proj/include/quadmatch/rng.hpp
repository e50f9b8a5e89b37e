#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace quadmatch {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Full-avalanche 64-bit mix
// used for seeding and stream derivation.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// xoshiro256++ (Blackman & Vigna 2019), seeded through a SplitMix64 walk.
// Chosen over std:: engines because the raw stream and all variate
// transformations below are fully specified here, so outputs are
// bit-identical across platforms and standard libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) noexcept {
        std::uint64_t x = seed;
        for (auto& s : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            s = mix64(x);
        }
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0,1), 53-bit resolution.
    double uniform01() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1]; safe as a log argument.
    double uniform_pos() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double a, double b) noexcept { return a + (b - a) * uniform01(); }

    // Exponential with unit rate.
    double exponential() noexcept { return -std::log(uniform_pos()); }

    // Poisson by inversion (sequential CDF search). Intended for mean <= 30;
    // larger means are handled by interarrival counting at the call sites.
    int poisson_inversion(double mean) noexcept {
        const double u = uniform01();
        double p = std::exp(-mean);
        double cdf = p;
        int k = 0;
        while (u > cdf) {
            ++k;
            p *= mean / k;
            cdf += p;
        }
        return k;
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

// Per-trial substream: one avalanche mix of (master_seed, trial) keys an
// independent generator. Identical across platforms and worker counts.
inline Rng derive_stream(std::uint64_t master_seed, std::uint64_t trial) noexcept {
    return Rng(mix64(master_seed + 0x9e3779b97f4a7c15ULL * (trial + 1)));
}

}  // namespace quadmatch

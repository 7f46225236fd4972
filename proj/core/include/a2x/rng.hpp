#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

#include "a2x/vec2.hpp"

// Seeded, platform-independent randomness. Every sampler consumes bits from
// Xoshiro256++ streams derived by hashing (seed, stream index, tag), so any
// realization index maps to its own substream and parallel generation is
// reproducible regardless of scheduling.

namespace a2x {

/// SplitMix64 finalizer; used both as a hash and to expand seeds.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Xoshiro256++ (Blackman & Vigna). Small, fast, and identical output on
/// every platform, unlike the std:: distributions.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) {
            sm += 0x9E3779B97F4A7C15ULL;
            word = mix64(sm);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = std::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = std::rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in the half-open interval (lo, hi].
    double uniform_excl_min(double lo, double hi) { return hi - (hi - lo) * uniform01(); }

    /// Uniform point in the disk of given radius centered at the origin.
    Vec2 in_disk(double radius) {
        const double r = radius * std::sqrt(uniform01());
        const double phi = 6.283185307179586476925287 * uniform01();
        return {r * std::cos(phi), r * std::sin(phi)};
    }

    /// Poisson(mean) by inverse-CDF multiplication for small means and
    /// Hormann's PTRS transformed rejection otherwise.
    std::int64_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean < 10.0) {
            const double limit = std::exp(-mean);
            std::int64_t k = 0;
            double prod = uniform01();
            while (prod > limit) {
                ++k;
                prod *= uniform01();
            }
            return k;
        }
        const double slam = std::sqrt(mean);
        const double loglam = std::log(mean);
        const double b = 0.931 + 2.53 * slam;
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double v_r = 0.9277 - 3.6224 / (b - 2.0);
        for (;;) {
            const double u = uniform01() - 0.5;
            const double v = uniform01();
            const double us = 0.5 - std::abs(u);
            const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= v_r) return static_cast<std::int64_t>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
                -mean + kf * loglam - std::lgamma(kf + 1.0)) {
                return static_cast<std::int64_t>(kf);
            }
        }
    }

  private:
    std::uint64_t state_[4];
};

/// Derived seed for a (seed, index, tag) triple. Index usually identifies
/// the Monte Carlo realization, the tag separates uses within one
/// realization.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index,
                                       std::uint64_t tag = 0) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ index);
    h = mix64(h ^ tag);
    return h;
}

inline Xoshiro256pp make_substream(std::uint64_t seed, std::uint64_t index, std::uint64_t tag = 0) {
    return Xoshiro256pp(substream_seed(seed, index, tag));
}

inline Xoshiro256pp make_stream(std::uint64_t seed) { return Xoshiro256pp(mix64(seed)); }

}  // namespace a2x

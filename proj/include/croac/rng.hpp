#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

namespace croac {

// SplitMix64 finalizer. Used for seed derivation so that every (master seed,
// function, algorithm, run index) cell of a suite gets its own stream.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t h, std::uint64_t v) noexcept {
    return splitmix64(h ^ splitmix64(v));
}

// Domain tags keep the per-run streams and the benchmark-generation streams
// disjoint even when the same master seed feeds both.
inline constexpr std::uint64_t kRunStreamTag = 0x52554e2d53545231ull;
inline constexpr std::uint64_t kSpecStreamTag = 0x535045432d535431ull;

inline std::uint64_t derive_run_seed(std::uint64_t master_seed, int function_id,
                                     int algorithm_id, int run_index) {
    std::uint64_t h = splitmix64(master_seed);
    h = mix_seed(h, kRunStreamTag);
    h = mix_seed(h, static_cast<std::uint64_t>(function_id));
    h = mix_seed(h, static_cast<std::uint64_t>(algorithm_id));
    h = mix_seed(h, static_cast<std::uint64_t>(run_index));
    return h;
}

inline std::uint64_t derive_spec_seed(std::uint64_t master_seed) {
    return mix_seed(splitmix64(master_seed), kSpecStreamTag);
}

// Random stream used everywhere in the library. All distributions are built
// by hand on top of mt19937_64 raw output, so a given seed produces the same
// values on every platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1), 53 bits of mantissa.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Zero-mean Gaussian via Box-Muller. Two fresh uniforms per draw; no
    // state carried between calls.
    double normal(double stddev) {
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps log() finite
        const double u2 = uniform01();
        return stddev * std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    // Unbiased integer in [0, n). Rejection sampling on the raw output.
    std::size_t index(std::size_t n) {
        const std::uint64_t m = static_cast<std::uint64_t>(n);
        const std::uint64_t threshold = (0 - m) % m;  // 2^64 mod n
        std::uint64_t r = engine_();
        while (r < threshold) r = engine_();
        return static_cast<std::size_t>(r % m);
    }

    // Ordered pair of distinct indices in [0, n), n >= 2.
    std::pair<std::size_t, std::size_t> distinct_pair(std::size_t n) {
        const std::size_t first = index(n);
        std::size_t second = index(n - 1);
        if (second >= first) ++second;
        return {first, second};
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace croac

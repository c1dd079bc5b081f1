#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

// Sampling helpers built directly on the mt19937_64 bit stream. The standard
// <random> distributions are implementation-defined, so identical seeds would
// not reproduce across standard libraries; these do.

namespace jamloc {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// SplitMix64 finalizer. Derives independent stream seeds from a master seed;
// adding streams never perturbs earlier ones.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Standard normal via Box-Muller; consumes exactly two engine draws per call.
inline double standard_normal(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

// Unbiased integer in [0, n) by masked rejection.
inline std::uint64_t bounded_uint(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
        const std::uint64_t v = rng() & mask;
        if (v < n) return v;
    }
}

template <typename T>
void fisher_yates_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[bounded_uint(rng, i)]);
    }
}

}  // namespace jamloc

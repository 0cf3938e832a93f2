#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rumorcluster {

// Seeded RNG helpers. std::uniform_*_distribution is implementation-defined,
// so draws go through these instead; mt19937_64 itself is fully specified.

using Rng = std::mt19937_64;

/// Uniform double in (0, 1].
inline double uniform_unit(Rng& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

/// Uniform integer in [0, n). Modulo bias is negligible for the ranges used here.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    return rng() % n;
}

/// Standard normal via Box-Muller.
inline double standard_normal(Rng& rng) {
    const double u1 = uniform_unit(rng);
    const double u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

} // namespace rumorcluster

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace shakekit {

/// Deterministic 64-bit generator: splitmix64 state advance feeding a
/// Box-Muller transform. Seeding with the same value always yields the
/// same stream on any platform, so corpora regenerate bit-for-bit. The
/// exact algorithm and constants are spelled out in the README so other
/// implementations can reproduce them.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1): the top 53 bits scaled by 2^-53.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via the Box-Muller cosine branch. Consumes exactly
    /// two draws per call; the sine branch is discarded so the stream
    /// position never depends on call history.
    double next_gaussian() {
        const double u1 =
            static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

} // namespace shakekit

// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Counter-based deterministic random streams. Every variate is a pure
// function of (seed, stream id, position), so work can be split across
// threads in any order and still reproduce bit-identically.
//
// The transform is fixed and documented so results are portable:
//   base        = mix64(seed ^ mix64(stream_id + GOLDEN))
//   word_j      = mix64(base + (j + 1) * GOLDEN)          j = 0, 1, ...
//   uniform     = ((word >> 11) + 1) * 2^-53              in (0, 1]
//   gaussians   = Box-Muller on two consecutive uniforms
// where mix64 is the splitmix64 finalizer and GOLDEN = 0x9E3779B97F4A7C15.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace immi::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

/// Key for a sub-stream of `seed` (per draw, per channel, per grid point).
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t stream_id) {
    return mix64(seed ^ mix64(stream_id + kGolden));
}

class CounterStream {
  public:
    CounterStream(std::uint64_t seed, std::uint64_t stream_id)
        : base_(derive(seed, stream_id)) {}

    std::uint64_t next_u64() { return mix64(base_ + (++n_) * kGolden); }

    /// Uniform on (0, 1]; never 0, so its log is finite.
    double next_unit() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Pair of independent standard normals.
    std::pair<double, double> next_gaussian_pair() {
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

  private:
    std::uint64_t base_;
    std::uint64_t n_ = 0;
};

}  // namespace immi::rng

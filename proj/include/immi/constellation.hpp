// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "immi/types.hpp"

namespace immi {

enum class ConstellationKind { psk, qam, custom };

std::string_view kind_name(ConstellationKind kind);

/// Symbol alphabet normalized to unit average energy, with a fixed point
/// order so serialized outputs are reproducible:
///   - PSK: counterclockwise points exp(j*2*pi*k/S). QPSK (S = 4) starts on
///     the diagonal at angle pi/4, i.e. {(1+j), (-1+j), (-1-j), (1-j)}/sqrt2;
///     every other order starts at angle 0, so BPSK is {+1, -1}.
///   - QAM: square grid read row-major from the top-left corner (largest
///     imaginary part first, real part ascending), odd-integer levels scaled
///     to unit average energy (1/sqrt(10) for 16-QAM, 1/sqrt(42) for 64-QAM).
class Constellation {
  public:
    /// Builds a psk or qam alphabet; rejects unsupported orders.
    static Constellation build(ConstellationKind kind, std::size_t order);

    /// User-supplied point list; must already have unit average energy
    /// (within 1e-12) and pairwise-distinct points.
    static Constellation custom(std::vector<Complex> points);

    /// "bpsk", "qpsk", "qam16", "qam64" plus the general "pskN" / "qamN".
    static Constellation from_name(std::string_view name);

    /// Point list read from a JSON file: [[re, im], ...].
    static Constellation load_custom(const std::string& path);

    ConstellationKind kind() const { return kind_; }
    std::size_t order() const { return points_.size(); }
    std::span<const Complex> points() const { return points_; }
    const Complex& point(std::size_t i) const { return points_[i]; }

    double average_energy() const;

  private:
    Constellation(ConstellationKind kind, std::vector<Complex> points);

    ConstellationKind kind_;
    std::vector<Complex> points_;
};

}  // namespace immi

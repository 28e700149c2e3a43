// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "immi/channel.hpp"

namespace immi {

enum class EnsembleDist { rayleigh, fixed, file };

/// Ordered list of channel realizations sharing one (outputs, inputs) shape.
struct ChannelEnsemble {
    std::vector<ChannelRealization> realizations;
    EnsembleDist dist = EnsembleDist::fixed;
    std::uint64_t seed = 0;

    std::size_t count() const { return realizations.size(); }
    std::size_t outputs() const { return realizations.front().outputs(); }
    std::size_t inputs() const { return realizations.front().inputs(); }
};

/// i.i.d. circularly-symmetric complex Gaussian entries of unit variance
/// (real and imaginary parts each have variance 1/2, so |h| is Rayleigh
/// with scale 1/sqrt(2)). Realization k draws from counter stream
/// (seed, k), entries row-major, one Gaussian pair per entry; the result
/// depends only on (outputs, inputs, count, seed).
ChannelEnsemble rayleigh_ensemble(std::size_t outputs, std::size_t inputs, std::size_t count,
                                  std::uint64_t seed);

/// Channel ensemble file: JSON array of
///   {"r": int, "t": int, "entries": [[[re, im], ... t per row], ... r rows]}.
/// Loading checks the schema and that all realizations share one shape;
/// saving uses shortest-round-trip decimals so load(save(x)) == x exactly.
ChannelEnsemble load_channels(const std::string& path);
void save_channels(const ChannelEnsemble& ensemble, const std::string& path);

}  // namespace immi

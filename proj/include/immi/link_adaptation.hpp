// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// MI-based link adaptation: average per-symbol MI into one effective value
// and pick the fastest MCS whose threshold it meets.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "immi/channel.hpp"
#include "immi/constellation.hpp"
#include "immi/monte_carlo.hpp"

namespace immi {

struct McsEntry {
    std::string id;
    ConstellationKind kind = ConstellationKind::psk;
    std::size_t order = 2;
    double coding_rate = 1.0;   // in (0, 1]
    double min_mi_bits = 0.0;   // required effective MI per channel use

    double spectral_efficiency(std::size_t inputs) const;  // coding_rate * log2(t * order)
};

/// MCS entries sorted by spectral efficiency, strictly increasing in both
/// spectral efficiency and min_mi_bits, with every threshold reachable for
/// the configured input count.
class McsTable {
  public:
    static McsTable from_entries(std::vector<McsEntry> entries, std::size_t inputs);

    /// JSON array of {"id", "constellation", "order", "coding_rate",
    /// "min_mi_bits"}; "constellation" is "psk" or "qam".
    static McsTable load(const std::string& path, std::size_t inputs);

    std::span<const McsEntry> entries() const { return entries_; }
    std::size_t inputs() const { return inputs_; }

  private:
    McsTable(std::vector<McsEntry> entries, std::size_t inputs);

    std::vector<McsEntry> entries_;
    std::size_t inputs_;
};

struct BlockSymbol {
    ChannelRealization channel;
    SnrPoint snr;
};

/// Arithmetic mean over the block of per-symbol closed-form MI; method must
/// be first_order or second_order (clamped value). All symbols must share
/// one channel shape.
double effective_mi(std::span<const BlockSymbol> block, const Constellation& constellation,
                    MiMethod method);

/// Highest-spectral-efficiency entry whose threshold is met; the comparison
/// is inclusive, so an effective MI equal to a threshold selects that entry.
std::optional<McsEntry> select_mcs(double eff_mi_bits, const McsTable& table);

}  // namespace immi

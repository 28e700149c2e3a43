// SPDX-License-Identifier: Apache-2.0

#include "immi/link_adaptation.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "immi/augmented.hpp"
#include "immi/closed_form.hpp"

namespace immi {

double McsEntry::spectral_efficiency(std::size_t inputs) const {
    return coding_rate * std::log2(static_cast<double>(inputs * order));
}

McsTable::McsTable(std::vector<McsEntry> entries, std::size_t inputs)
    : entries_(std::move(entries)), inputs_(inputs) {
    if (inputs_ < 1) throw ValidationError("MCS table input count must be >= 1");
    if (entries_.empty()) throw ValidationError("MCS table must be nonempty");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const McsEntry& e = entries_[i];
        const std::string where = "MCS entry " + std::to_string(i);
        if (e.order < 1) throw ValidationError(where + ": order must be >= 1");
        if (!(e.coding_rate > 0.0) || e.coding_rate > 1.0)
            throw ValidationError(where + ": coding rate must be in (0, 1]");
        if (!(e.min_mi_bits >= 0.0)) throw ValidationError(where + ": min_mi_bits must be >= 0");
        const double ceiling = std::log2(static_cast<double>(inputs_ * e.order));
        if (e.min_mi_bits > ceiling)
            throw ValidationError(where + ": min_mi_bits exceeds log2(t*S) = " +
                                  std::to_string(ceiling));
        if (i > 0) {
            if (e.spectral_efficiency(inputs_) <= entries_[i - 1].spectral_efficiency(inputs_))
                throw ValidationError(where + ": spectral efficiency must be strictly increasing");
            if (e.min_mi_bits <= entries_[i - 1].min_mi_bits)
                throw ValidationError(where + ": min_mi_bits must be strictly increasing");
        }
    }
}

McsTable McsTable::from_entries(std::vector<McsEntry> entries, std::size_t inputs) {
    return McsTable(std::move(entries), inputs);
}

McsTable McsTable::load(const std::string& path, std::size_t inputs) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open MCS table: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("MCS table ") + path + ": " + e.what());
    }
    if (!doc.is_array()) throw ValidationError("MCS table must be a JSON array");

    std::vector<McsEntry> entries;
    entries.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& item = doc[i];
        const std::string where = "MCS entry " + std::to_string(i);
        if (!item.is_object()) throw ValidationError(where + ": expected an object");
        for (const char* key : {"id", "constellation", "order", "coding_rate", "min_mi_bits"})
            if (!item.contains(key)) throw ValidationError(where + ": missing field " + key);
        McsEntry entry;
        entry.id = item["id"].get<std::string>();
        const auto kind = item["constellation"].get<std::string>();
        if (kind == "psk") entry.kind = ConstellationKind::psk;
        else if (kind == "qam") entry.kind = ConstellationKind::qam;
        else throw ValidationError(where + ": constellation must be psk or qam");
        entry.order = item["order"].get<std::size_t>();
        entry.coding_rate = item["coding_rate"].get<double>();
        entry.min_mi_bits = item["min_mi_bits"].get<double>();
        entries.push_back(std::move(entry));
    }
    return McsTable(std::move(entries), inputs);
}

double effective_mi(std::span<const BlockSymbol> block, const Constellation& constellation,
                    MiMethod method) {
    if (block.empty()) throw std::invalid_argument("block must be nonempty");
    if (method != MiMethod::first_order && method != MiMethod::second_order)
        throw std::invalid_argument("effective MI uses a closed-form method");
    const std::size_t r = block.front().channel.outputs();
    const std::size_t t = block.front().channel.inputs();

    double acc = 0.0;
    for (const BlockSymbol& sym : block) {
        if (sym.channel.outputs() != r || sym.channel.inputs() != t)
            throw ValidationError("block mixes channel dimensions");
        const AugmentedSymbolSet aug = augment(sym.channel, constellation);
        const GibbsKernel kernel =
            gibbs_kernel(pairwise_sq_distances(aug), sym.snr.gamma(), t, constellation.order());
        acc += method == MiMethod::first_order ? mi_first_order(kernel)
                                               : mi_second_order(kernel, aug).bits;
    }
    return acc / static_cast<double>(block.size());
}

std::optional<McsEntry> select_mcs(double eff_mi_bits, const McsTable& table) {
    const auto entries = table.entries();
    // Entries are sorted by spectral efficiency, so the last qualifying
    // entry is the fastest; the threshold comparison is inclusive.
    for (std::size_t i = entries.size(); i-- > 0;)
        if (entries[i].min_mi_bits <= eff_mi_bits) return entries[i];
    return std::nullopt;
}

}  // namespace immi

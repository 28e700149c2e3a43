// SPDX-License-Identifier: Apache-2.0

#include "immi/ensemble.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "immi/rng.hpp"

namespace immi {

ChannelEnsemble rayleigh_ensemble(std::size_t outputs, std::size_t inputs, std::size_t count,
                                  std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("ensemble needs at least one realization");
    const double scale = std::sqrt(0.5);  // unit entry variance split over re/im

    ChannelEnsemble ensemble;
    ensemble.dist = EnsembleDist::rayleigh;
    ensemble.seed = seed;
    ensemble.realizations.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        rng::CounterStream stream(seed, k);
        ChannelRealization h(outputs, inputs);
        for (std::size_t i = 0; i < outputs; ++i)
            for (std::size_t j = 0; j < inputs; ++j) {
                const auto [re, im] = stream.next_gaussian_pair();
                h.set_entry(i, j, {scale * re, scale * im});
            }
        ensemble.realizations.push_back(std::move(h));
    }
    return ensemble;
}

namespace {

nlohmann::json channel_to_json(const ChannelRealization& h) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < h.outputs(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < h.inputs(); ++j) {
            const Complex& z = h.entry(i, j);
            row.push_back({z.real(), z.imag()});
        }
        entries.push_back(std::move(row));
    }
    return {{"r", h.outputs()}, {"t", h.inputs()}, {"entries", std::move(entries)}};
}

ChannelRealization channel_from_json(const nlohmann::json& doc, std::size_t index) {
    const std::string where = "realization " + std::to_string(index);
    if (!doc.is_object() || !doc.contains("r") || !doc.contains("t") || !doc.contains("entries"))
        throw ValidationError(where + ": expected object with r, t, entries");
    if (!doc["r"].is_number_integer() || !doc["t"].is_number_integer())
        throw ValidationError(where + ": r and t must be integers");
    const auto r = doc["r"].get<std::int64_t>();
    const auto t = doc["t"].get<std::int64_t>();
    if (r < 1 || t < 1) throw ValidationError(where + ": r and t must be >= 1");

    const auto& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(r))
        throw ValidationError(where + ": entries must have r rows");
    ChannelRealization h(static_cast<std::size_t>(r), static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < h.outputs(); ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || row.size() != h.inputs())
            throw ValidationError(where + ": each row must have t [re, im] pairs");
        for (std::size_t j = 0; j < h.inputs(); ++j) {
            const auto& pair = row[j];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
                throw ValidationError(where + ": each entry must be an [re, im] pair");
            h.set_entry(i, j, {pair[0].get<double>(), pair[1].get<double>()});
        }
    }
    return h;
}

}  // namespace

ChannelEnsemble load_channels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open channel file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        // e.what() carries the byte offset of the failure.
        throw ParseError(std::string("channel file ") + path + ": " + e.what());
    }
    if (!doc.is_array()) throw ValidationError("channel file must be a JSON array");
    if (doc.empty()) throw ValidationError("channel file must contain at least one realization");

    ChannelEnsemble ensemble;
    ensemble.dist = EnsembleDist::file;
    ensemble.realizations.reserve(doc.size());
    for (std::size_t k = 0; k < doc.size(); ++k) {
        ChannelRealization h = channel_from_json(doc[k], k);
        if (k > 0 && (h.outputs() != ensemble.outputs() || h.inputs() != ensemble.inputs()))
            throw ValidationError("realization " + std::to_string(k) +
                                  ": dimensions differ from realization 0");
        ensemble.realizations.push_back(std::move(h));
    }
    return ensemble;
}

void save_channels(const ChannelEnsemble& ensemble, const std::string& path) {
    nlohmann::json doc = nlohmann::json::array();
    for (const ChannelRealization& h : ensemble.realizations) doc.push_back(channel_to_json(h));
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write channel file: " + path);
    out << doc.dump(1) << '\n';
}

}  // namespace immi

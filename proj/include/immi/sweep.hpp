// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// SNR sweeps over channel ensembles: per-method MI averaged across
// channels, approximation-vs-oracle comparison, and CSV output. Everything
// is deterministic in the master seed: the Monte Carlo stream of grid
// point (channel i, SNR j) is keyed by (seed, i, j) and rows are sorted
// before writing, so results do not depend on evaluation order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "immi/constellation.hpp"
#include "immi/ensemble.hpp"
#include "immi/monte_carlo.hpp"

namespace immi {

/// Inclusive dB grid "start:stop:step"; a single value is a one-point grid.
struct SnrGrid {
    double start_db = -10.0;
    double stop_db = 30.0;
    double step_db = 1.0;

    static SnrGrid parse(std::string_view text);
    std::vector<double> points_db() const;
};

struct SweepConfig {
    std::size_t outputs = 2;  // ignored when channels is set
    std::size_t inputs = 2;
    Constellation constellation = Constellation::from_name("qpsk");
    SnrGrid grid;
    std::size_t n_channels = 100;
    std::vector<MiMethod> methods = {MiMethod::first_order, MiMethod::second_order};
    std::int64_t oracle_samples = 10000;
    std::uint64_t seed = 0;
    std::optional<ChannelEnsemble> channels;  // overrides generation when set
    bool raw_second_order = false;            // emit unclamped second-order values
};

struct SweepRow {
    double snr_db = 0.0;
    MiMethod method = MiMethod::first_order;
    double mi_mean = 0.0;
    double mi_stderr = 0.0;                  // over channels
    std::optional<double> oracle_stderr;     // mean per-channel MC standard error
    std::optional<double> abs_err_mean;      // compare only, closed-form rows
    std::optional<double> abs_err_max;
};

/// Per-method MI averaged over the ensemble. Rows sorted by (snr_db, method name).
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Sweep plus per-method |I_method - I_oracle| statistics; the oracle runs
/// regardless of the configured method list.
std::vector<SweepRow> run_compare(const SweepConfig& config);

/// CSV with header, '.' decimal separator, trailing newline. compare_csv
/// appends the abs_err columns.
std::string sweep_csv(std::span<const SweepRow> rows);
std::string compare_csv(std::span<const SweepRow> rows);

/// Companion gnuplot script plotting the named CSV.
std::string gnuplot_script(const std::string& csv_filename, std::span<const SweepRow> rows,
                           bool compare);

}  // namespace immi

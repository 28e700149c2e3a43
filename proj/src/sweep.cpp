// SPDX-License-Identifier: Apache-2.0

#include "immi/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "immi/augmented.hpp"
#include "immi/closed_form.hpp"
#include "immi/rng.hpp"

namespace immi {

SnrGrid SnrGrid::parse(std::string_view text) {
    const auto parse_double = [](std::string_view part) {
        try {
            std::size_t used = 0;
            const double v = std::stod(std::string(part), &used);
            if (used != part.size() || !std::isfinite(v))
                throw std::invalid_argument("bad number");
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid SNR grid: " + std::string(part));
        }
    };

    SnrGrid grid;
    const auto first_colon = text.find(':');
    if (first_colon == std::string_view::npos) {
        grid.start_db = grid.stop_db = parse_double(text);
        grid.step_db = 1.0;
        return grid;
    }
    const auto second_colon = text.find(':', first_colon + 1);
    if (second_colon == std::string_view::npos)
        throw std::invalid_argument("SNR grid must be START:STOP:STEP or a single value");
    grid.start_db = parse_double(text.substr(0, first_colon));
    grid.stop_db = parse_double(text.substr(first_colon + 1, second_colon - first_colon - 1));
    grid.step_db = parse_double(text.substr(second_colon + 1));
    if (!(grid.step_db > 0.0)) throw std::invalid_argument("SNR step must be > 0");
    if (grid.stop_db < grid.start_db) throw std::invalid_argument("SNR stop must be >= start");
    return grid;
}

std::vector<double> SnrGrid::points_db() const {
    if (!(step_db > 0.0)) throw std::invalid_argument("SNR step must be > 0");
    if (stop_db < start_db) throw std::invalid_argument("SNR stop must be >= start");
    std::vector<double> points;
    // Tolerate rounding at the top endpoint so e.g. 0:1:0.1 includes 1.
    const auto count =
        static_cast<std::size_t>(std::floor((stop_db - start_db) / step_db + 1e-9)) + 1;
    points.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        points.push_back(start_db + static_cast<double>(k) * step_db);
    return points;
}

namespace {

struct PointResult {
    double value = 0.0;       // per-channel MI for one method
    double mc_stderr = 0.0;   // monte_carlo only
};

struct Accumulated {
    double mean = 0.0;
    double stderr_over_channels = 0.0;
    double mc_stderr_mean = 0.0;
};

Accumulated accumulate(const std::vector<PointResult>& per_channel) {
    Accumulated acc;
    const auto n = static_cast<double>(per_channel.size());
    for (const PointResult& p : per_channel) {
        acc.mean += p.value;
        acc.mc_stderr_mean += p.mc_stderr;
    }
    acc.mean /= n;
    acc.mc_stderr_mean /= n;
    if (per_channel.size() > 1) {
        double var = 0.0;
        for (const PointResult& p : per_channel) var += (p.value - acc.mean) * (p.value - acc.mean);
        var /= (n - 1.0);
        acc.stderr_over_channels = std::sqrt(var / n);
    }
    return acc;
}

void validate(const SweepConfig& config) {
    if (config.methods.empty()) throw std::invalid_argument("method list must be nonempty");
    if (!config.channels) {
        if (config.n_channels < 1) throw std::invalid_argument("channel count must be >= 1");
        if (config.outputs < 1 || config.inputs < 1)
            throw std::invalid_argument("channel dimensions must be >= 1");
    }
    const bool wants_oracle =
        std::find(config.methods.begin(), config.methods.end(), MiMethod::monte_carlo) !=
        config.methods.end();
    if (wants_oracle && config.oracle_samples < 2)
        throw std::invalid_argument("oracle needs at least 2 samples");
}

// Evaluates every (channel, SNR, method) point. Results are stored by
// index, so any evaluation order would produce the same output.
std::vector<SweepRow> run(const SweepConfig& config, bool with_compare) {
    validate(config);
    const ChannelEnsemble ensemble =
        config.channels ? *config.channels
                        : rayleigh_ensemble(config.outputs, config.inputs, config.n_channels,
                                            config.seed);
    const std::size_t t = ensemble.inputs();
    const std::size_t order = config.constellation.order();
    const std::vector<double> grid_db = config.grid.points_db();

    std::vector<MiMethod> methods = config.methods;
    if (with_compare &&
        std::find(methods.begin(), methods.end(), MiMethod::monte_carlo) == methods.end())
        methods.push_back(MiMethod::monte_carlo);

    const std::size_t n_channels = ensemble.count();
    const std::size_t n_snr = grid_db.size();
    // results[method][snr][channel]
    std::vector<std::vector<std::vector<PointResult>>> results(
        methods.size(),
        std::vector<std::vector<PointResult>>(n_snr, std::vector<PointResult>(n_channels)));

    const bool wants_oracle =
        std::find(methods.begin(), methods.end(), MiMethod::monte_carlo) != methods.end();

    for (std::size_t ch = 0; ch < n_channels; ++ch) {
        const AugmentedSymbolSet aug = augment(ensemble.realizations[ch], config.constellation);
        const RealMatrix d2 = pairwise_sq_distances(aug);
        for (std::size_t si = 0; si < n_snr; ++si) {
            const double gamma = std::pow(10.0, grid_db[si] / 10.0);
            const GibbsKernel kernel = gibbs_kernel(d2, gamma, t, order);
            for (std::size_t mi = 0; mi < methods.size(); ++mi) {
                PointResult& out = results[mi][si][ch];
                switch (methods[mi]) {
                    case MiMethod::first_order:
                        out.value = mi_first_order(kernel);
                        break;
                    case MiMethod::second_order: {
                        const SecondOrderMi value = mi_second_order(kernel, aug);
                        out.value = config.raw_second_order ? value.raw_bits : value.bits;
                        break;
                    }
                    case MiMethod::monte_carlo: {
                        const std::uint64_t point_seed =
                            rng::derive(rng::derive(config.seed, ch), si);
                        const MiEstimate est =
                            mi_monte_carlo(aug, gamma, config.oracle_samples, point_seed);
                        out.value = est.mean_bits;
                        out.mc_stderr = est.std_error_bits;
                        break;
                    }
                }
            }
        }
    }

    std::vector<SweepRow> rows;
    rows.reserve(methods.size() * n_snr);
    const auto oracle_index = static_cast<std::size_t>(
        std::find(methods.begin(), methods.end(), MiMethod::monte_carlo) - methods.begin());
    for (std::size_t si = 0; si < n_snr; ++si) {
        for (std::size_t mi = 0; mi < methods.size(); ++mi) {
            const Accumulated acc = accumulate(results[mi][si]);
            SweepRow row;
            row.snr_db = grid_db[si];
            row.method = methods[mi];
            row.mi_mean = acc.mean;
            row.mi_stderr = acc.stderr_over_channels;
            if (methods[mi] == MiMethod::monte_carlo) row.oracle_stderr = acc.mc_stderr_mean;
            if (with_compare && methods[mi] != MiMethod::monte_carlo && wants_oracle) {
                double err_acc = 0.0;
                double err_max = 0.0;
                for (std::size_t ch = 0; ch < n_channels; ++ch) {
                    const double err =
                        std::abs(results[mi][si][ch].value - results[oracle_index][si][ch].value);
                    err_acc += err;
                    err_max = std::max(err_max, err);
                }
                row.abs_err_mean = err_acc / static_cast<double>(n_channels);
                row.abs_err_max = err_max;
            }
            rows.push_back(row);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.snr_db != b.snr_db) return a.snr_db < b.snr_db;
        return method_name(a.method) < method_name(b.method);
    });
    return rows;
}

std::string format_number(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

std::string csv(std::span<const SweepRow> rows, bool compare) {
    std::string out = "snr_db,method,mi_bits_mean,mi_bits_stderr_over_channels,oracle_mc_stderr";
    if (compare) out += ",abs_err_mean,abs_err_max";
    out += '\n';
    for (const SweepRow& row : rows) {
        out += format_number("%.10g", row.snr_db);
        out += ',';
        out += method_name(row.method);
        out += ',';
        out += format_number("%.12g", row.mi_mean);
        out += ',';
        out += format_number("%.12g", row.mi_stderr);
        out += ',';
        if (row.oracle_stderr) out += format_number("%.12g", *row.oracle_stderr);
        if (compare) {
            out += ',';
            if (row.abs_err_mean) out += format_number("%.12g", *row.abs_err_mean);
            out += ',';
            if (row.abs_err_max) out += format_number("%.12g", *row.abs_err_max);
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) { return run(config, false); }

std::vector<SweepRow> run_compare(const SweepConfig& config) { return run(config, true); }

std::string sweep_csv(std::span<const SweepRow> rows) { return csv(rows, false); }

std::string compare_csv(std::span<const SweepRow> rows) { return csv(rows, true); }

std::string gnuplot_script(const std::string& csv_filename, std::span<const SweepRow> rows,
                           bool compare) {
    std::vector<MiMethod> methods;
    for (const SweepRow& row : rows)
        if (std::find(methods.begin(), methods.end(), row.method) == methods.end())
            methods.push_back(row.method);

    std::string out;
    out += "# gnuplot script for " + csv_filename + "\n";
    out += "set datafile separator ','\n";
    out += "set key left top\n";
    out += "set grid\n";
    out += "set xlabel 'SNR (dB)'\n";
    out += compare ? "set ylabel 'mean |MI - oracle| (bits)'\n" : "set ylabel 'MI (bits)'\n";
    const char* column = compare ? "column(6)" : "column(3)";
    out += "plot ";
    bool first = true;
    for (MiMethod method : methods) {
        if (compare && method == MiMethod::monte_carlo) continue;
        if (!first) out += ", \\\n     ";
        first = false;
        out += "'" + csv_filename + "' using 1:(strcol(2) eq '" + std::string(method_name(method)) +
               "' ? " + column + " : 1/0) with linespoints title '" +
               std::string(method_name(method)) + "'";
    }
    out += '\n';
    return out;
}

}  // namespace immi

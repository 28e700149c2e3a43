// SPDX-License-Identifier: Apache-2.0

#include "immi/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string_view>

#include <CLI11.hpp>

#include "immi/link_adaptation.hpp"
#include "immi/sweep.hpp"

namespace immi::cli {

namespace {

struct Options {
    std::size_t t = 2;
    std::size_t r = 2;
    std::string constellation = "qpsk";
    std::string snr_db = "-10:30:1";
    std::size_t channels = 100;
    std::uint64_t seed = 0;
    std::string methods = "first_order,second_order";
    std::int64_t oracle_samples = 10000;
    std::string channel_file;
    std::string mcs_table;
    std::size_t block_size = 1;
    std::string out;
    bool raw = false;
};

std::vector<MiMethod> parse_methods(const std::string& text) {
    std::vector<MiMethod> methods;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto part = std::string_view(text).substr(
            pos, comma == std::string::npos ? text.size() - pos : comma - pos);
        if (!part.empty()) {
            const auto method = method_from_name(part);
            if (!method) throw std::invalid_argument("unknown method: " + std::string(part));
            if (std::find(methods.begin(), methods.end(), *method) == methods.end())
                methods.push_back(*method);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (methods.empty()) throw std::invalid_argument("method list must be nonempty");
    return methods;
}

Constellation resolve_constellation(const std::string& name_or_path) {
    if (name_or_path.ends_with(".json")) return Constellation::load_custom(name_or_path);
    return Constellation::from_name(name_or_path);
}

SweepConfig make_config(const Options& opts) {
    SweepConfig config;
    config.outputs = opts.r;
    config.inputs = opts.t;
    config.constellation = resolve_constellation(opts.constellation);
    config.grid = SnrGrid::parse(opts.snr_db);
    config.n_channels = opts.channels;
    config.methods = parse_methods(opts.methods);
    config.oracle_samples = opts.oracle_samples;
    config.seed = opts.seed;
    config.raw_second_order = opts.raw;
    if (!opts.channel_file.empty()) config.channels = load_channels(opts.channel_file);
    return config;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_csv_and_plot(const std::string& path, const std::string& csv,
                        std::span<const SweepRow> rows, bool compare) {
    write_file(path, csv);
    write_file(path + ".gp", gnuplot_script(path, rows, compare));
    std::cout << "wrote " << path << " and " << path << ".gp\n";
}

int cmd_sweep(const Options& opts) {
    const SweepConfig config = make_config(opts);
    const std::vector<SweepRow> rows = run_sweep(config);
    write_csv_and_plot(opts.out.empty() ? "sweep.csv" : opts.out, sweep_csv(rows), rows, false);
    return 0;
}

int cmd_compare(const Options& opts) {
    const SweepConfig config = make_config(opts);
    const std::vector<SweepRow> rows = run_compare(config);
    write_csv_and_plot(opts.out.empty() ? "compare.csv" : opts.out, compare_csv(rows), rows, true);
    return 0;
}

int cmd_gen_channels(const Options& opts) {
    const ChannelEnsemble ensemble = rayleigh_ensemble(opts.r, opts.t, opts.channels, opts.seed);
    const std::string path = opts.out.empty() ? "channels.json" : opts.out;
    save_channels(ensemble, path);
    std::cout << "wrote " << path << " (" << ensemble.count() << " realizations)\n";
    return 0;
}

int cmd_adapt(const Options& opts) {
    if (opts.channel_file.empty()) throw std::invalid_argument("adapt requires --channel-file");
    if (opts.mcs_table.empty()) throw std::invalid_argument("adapt requires --mcs-table");
    if (opts.block_size < 1) throw std::invalid_argument("block size must be >= 1");

    const ChannelEnsemble ensemble = load_channels(opts.channel_file);
    const Constellation constellation = resolve_constellation(opts.constellation);
    const McsTable table = McsTable::load(opts.mcs_table, ensemble.inputs());
    const std::vector<MiMethod> methods = parse_methods(opts.methods);
    const MiMethod method = methods.front();
    if (method == MiMethod::monte_carlo)
        throw std::invalid_argument("adapt uses a closed-form method");
    const std::vector<double> grid_db = SnrGrid::parse(opts.snr_db).points_db();

    // One block per (SNR point, group of block-size consecutive channels).
    std::string csv = "block_id,eff_mi_bits,selected_mcs_id\n";
    std::size_t block_id = 0;
    for (double db : grid_db) {
        const SnrPoint snr = SnrPoint::from_db(db);
        for (std::size_t lo = 0; lo < ensemble.count(); lo += opts.block_size) {
            const std::size_t hi = std::min(ensemble.count(), lo + opts.block_size);
            std::vector<BlockSymbol> block;
            block.reserve(hi - lo);
            for (std::size_t i = lo; i < hi; ++i)
                block.push_back({ensemble.realizations[i], snr});
            const double eff = effective_mi(block, constellation, method);
            const auto selected = select_mcs(eff, table);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%zu,%.12g,", block_id++, eff);
            csv += buf;
            csv += selected ? selected->id : "none";
            csv += '\n';
        }
    }
    const std::string path = opts.out.empty() ? "adapt.csv" : opts.out;
    write_file(path, csv);
    std::cout << "wrote " << path << " (" << block_id << " blocks)\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Closed-form mutual information of index modulations, with a Monte Carlo "
                 "reference and MI-based MCS selection"};
    app.require_subcommand(1);
    Options opts;

    const auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("--t", opts.t, "Transmit inputs (ignored with --channel-file)");
        cmd->add_option("--r", opts.r, "Receive outputs (ignored with --channel-file)");
        cmd->add_option("--constellation", opts.constellation,
                        "bpsk|qpsk|qam16|qam64|pskN|qamN or a JSON point-list file");
        cmd->add_option("--snr-db", opts.snr_db, "SNR grid START:STOP:STEP in dB, or one value");
        cmd->add_option("--channels", opts.channels, "Number of channel realizations");
        cmd->add_option("--seed", opts.seed, "Master seed");
        cmd->add_option("--methods", opts.methods,
                        "Comma list of first_order,second_order,monte_carlo");
        cmd->add_option("--oracle-samples", opts.oracle_samples,
                        "Monte Carlo samples per (channel, SNR) point");
        cmd->add_option("--channel-file", opts.channel_file, "Channel ensemble JSON file");
        cmd->add_option("--out", opts.out, "Output CSV path");
        cmd->add_flag("--raw", opts.raw, "Emit unclamped second-order values");
    };

    CLI::App* sweep = app.add_subcommand("sweep", "Average MI per method over an SNR grid");
    add_model_flags(sweep);
    CLI::App* compare =
        app.add_subcommand("compare", "Sweep plus |method - oracle| error statistics");
    add_model_flags(compare);

    CLI::App* gen = app.add_subcommand("gen-channels", "Generate a Rayleigh channel ensemble");
    gen->add_option("--r", opts.r, "Receive outputs");
    gen->add_option("--t", opts.t, "Transmit inputs");
    gen->add_option("--channels", opts.channels, "Number of realizations");
    gen->add_option("--seed", opts.seed, "Master seed");
    gen->add_option("--out", opts.out, "Output JSON path");

    CLI::App* adapt = app.add_subcommand("adapt", "Select an MCS per block from effective MI");
    adapt->add_option("--channel-file", opts.channel_file, "Channel ensemble JSON file");
    adapt->add_option("--constellation", opts.constellation,
                      "bpsk|qpsk|qam16|qam64|pskN|qamN or a JSON point-list file");
    adapt->add_option("--snr-db", opts.snr_db, "SNR grid START:STOP:STEP in dB, or one value");
    adapt->add_option("--mcs-table", opts.mcs_table, "MCS table JSON file");
    adapt->add_option("--block-size", opts.block_size, "Channels per block");
    adapt->add_option("--methods", opts.methods,
                      "Closed-form method for effective MI (first entry used)");
    adapt->add_option("--out", opts.out, "Output CSV path");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("immi");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(opts);
        if (compare->parsed()) return cmd_compare(opts);
        if (gen->parsed()) return cmd_gen_channels(opts);
        return cmd_adapt(opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace immi::cli

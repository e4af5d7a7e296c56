/**
 * Copyright 2026, the qdiscrim developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qdiscrim/cli.hpp"

namespace {

using qdiscrim::cli::RunConfig;

struct GridSpec {
    bool set = false;
    double start = 0.0, stop = 0.0;
    int steps = 0;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw qdiscrim::InvalidGrid("--grid expects start:stop:steps");
    try {
        g.start = std::stod(text.substr(0, first));
        g.stop = std::stod(text.substr(first + 1, second - first - 1));
        g.steps = std::stoi(text.substr(second + 1));
    } catch (const std::exception&) {
        throw qdiscrim::InvalidGrid("--grid expects numeric start:stop:steps");
    }
    g.set = true;
    return g;
}

void add_common_options(CLI::App* cmd, RunConfig& config, std::string& grid_text,
                        std::string& out_path) {
    cmd->add_option("--channel", config.channel_spec,
                    "Builtin channel (two_pauli, amplitude_damping, depolarizing, dephasing) "
                    "or a JSON channel file");
    cmd->add_option("--x", config.x, "Channel parameter in [0, 1]");
    cmd->add_option("--grid", grid_text, "Parameter grid as start:stop:steps");
    cmd->add_option("--seed", config.seed, "RNG seed (overrides QDISCRIM_SEED)");
    cmd->add_option("--restarts", config.restarts, "Optimizer restarts");
    cmd->add_option("--trials", config.trials, "Monte Carlo trials");
    cmd->add_option("--out", out_path, "Write CSV to this file instead of stdout");
    cmd->add_flag("--quick", config.quick, "Reduced sample counts, same checks");
    cmd->add_flag("--paper", config.paper, "Include published reference values");
    cmd->add_option("--workers", config.workers, "Worker threads (0 = machine parallelism)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qdiscrim: minimum-error discrimination through noisy qubit channels"};
    app.require_subcommand(1);

    RunConfig config;
    config.seed = qdiscrim::cli::default_seed();
    std::string grid_text;
    std::string out_path;

    CLI::App* table = app.add_subcommand(
        "table", "Reproduce the representative product-vs-entangled error table");
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep the channel parameter: product, ansatz and searched error rates");
    CLI::App* optimize =
        app.add_subcommand("optimize", "Numeric input-pair searches for a channel");
    CLI::App* verify = app.add_subcommand("verify", "Run the property battery");
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimate of the error rate");
    CLI::App* info =
        app.add_subcommand("info", "Mutual information and capacity lower bounds");
    for (CLI::App* cmd : {table, sweep, optimize, verify, mc, info})
        add_common_options(cmd, config, grid_text, out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!(config.x >= 0.0 && config.x <= 1.0))
            throw qdiscrim::ParameterOutOfRange("--x must lie in [0, 1]");
        if (config.restarts < 1)
            throw qdiscrim::ParameterOutOfRange("--restarts must be at least 1");
        if (!grid_text.empty()) {
            const GridSpec g = parse_grid(grid_text);
            config.has_grid = g.set;
            config.grid_start = g.start;
            config.grid_stop = g.stop;
            config.grid_steps = g.steps;
        }

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) {
                std::cerr << "error: cannot open output file " << out_path << "\n";
                return 3;
            }
        }
        std::ostream& out = out_path.empty() ? std::cout : file;

        if (table->parsed()) return qdiscrim::cli::cmd_table(config, out);
        if (sweep->parsed()) return qdiscrim::cli::cmd_sweep(config, out);
        if (optimize->parsed()) return qdiscrim::cli::cmd_optimize(config, out);
        if (mc->parsed()) return qdiscrim::cli::cmd_mc(config, out);
        if (info->parsed()) return qdiscrim::cli::cmd_info(config, out);
        if (verify->parsed()) {
            // Human-readable report on stdout; the CSV summary follows it
            // there too, unless --out redirects the CSV to a file.
            return qdiscrim::cli::cmd_verify(config, std::cout, &out);
        }
        return 2;
    } catch (const qdiscrim::InvalidGrid& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qdiscrim::ParameterOutOfRange& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qdiscrim::ChannelFormatError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const qdiscrim::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// SPDX-License-Identifier: Apache-2.0
//
// irspn: phase-noise-aware channel estimation and rate analysis for IRS links
// Copyright (C) 2026 The irspn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end: runs registered experiments and writes CSV plus a
// JSON manifest.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "irspn/config.hpp"
#include "irspn/experiments.hpp"

namespace {

constexpr int exit_config_error = 1;
constexpr int exit_runtime_error = 2;

std::vector<std::string> split(const std::string& text, char separator) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, separator))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split(text, ',')) {
        std::size_t used = 0;
        const double value = std::stod(item, &used);
        if (used != item.size()) throw irspn::ConfigError({"grid: cannot parse '" + item + "'"});
        out.push_back(value);
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"IRS link analysis with oscillator phase noise"};
    app.require_subcommand(1);

    bool machine = false;
    auto* list = app.add_subcommand("list", "List the registered experiments");
    list->add_flag("--machine", machine, "Tab-separated records: name, anchor, description");

    std::string config_path;
    std::string experiment;
    std::string out_path;
    std::vector<std::string> overrides;
    std::string grid;
    std::string n_values;
    std::string fidelities;
    irspn::ExperimentOptions options;

    auto* run = app.add_subcommand("run", "Run an experiment");
    run->add_option("--config", config_path, "JSON configuration (defaults when omitted)");
    run->add_option("--experiment", experiment, "Experiment name (see `list`)")->required();
    run->add_option("--out", out_path, "CSV output path")->required();
    run->add_option("--set", overrides, "Override a configuration field, key=value");
    run->add_option("--trials", options.trials, "Monte Carlo trials per simulated point");
    run->add_option("--workers", options.workers, "Worker threads (0: all cores)");
    run->add_option("--subset", options.subset_size, "Simulated downlink symbols per rate estimate");
    run->add_option("--grid", grid, "Comma-separated sweep grid");
    run->add_option("--n-values", n_values, "Comma-separated N values for the sweep");
    run->add_option("--fidelities", fidelities, "Comma-separated subset of analytic,simplified,full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config_error;
    }

    if (*list) {
        std::cout << irspn::experiment_listing(machine);
        return 0;
    }

    irspn::SystemConfig config;
    try {
        if (!config_path.empty()) config = irspn::load_config(config_path);
        for (const auto& item : overrides) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw irspn::ConfigError({item + ": override must have the form key=value"});
            irspn::apply_override(config, item.substr(0, eq), item.substr(eq + 1));
        }
        irspn::validate(config);
        if (!grid.empty()) options.grid = parse_numbers(grid);
        if (!n_values.empty()) {
            std::vector<int> values;
            for (double v : parse_numbers(n_values)) values.push_back(static_cast<int>(v));
            options.n_values = values;
        }
        if (!fidelities.empty()) {
            std::vector<irspn::Fidelity> values;
            for (const auto& f : split(fidelities, ',')) values.push_back(irspn::parse_fidelity(f));
            options.fidelities = values;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    }

    try {
        const auto result = irspn::run_experiment(config, experiment, options);
        const std::filesystem::path csv_path(out_path);
        auto manifest_path = csv_path;
        manifest_path.replace_extension(".manifest.json");
        write_file(csv_path, result.csv);
        write_file(manifest_path, irspn::make_manifest(experiment, result, options).dump(2) + "\n");
        std::cerr << "wrote " << csv_path.string() << " and " << manifest_path.string() << '\n';
    } catch (const irspn::UnknownExperiment& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const irspn::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime_error;
    }
    return 0;
}

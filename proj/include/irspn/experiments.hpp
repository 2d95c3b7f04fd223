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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "irspn/config.hpp"
#include "irspn/montecarlo.hpp"
#include "irspn/types.hpp"

namespace irspn {

struct ExperimentInfo {
    std::string_view name;
    std::string_view description;
    std::string_view anchor;  // figure or analysis the experiment reproduces
};

std::span<const ExperimentInfo> list_experiments();

/// Human-readable table, or one tab-separated `name\tanchor\tdescription`
/// record per line when `machine_readable` is set.
std::string experiment_listing(bool machine_readable);

class UnknownExperiment : public std::invalid_argument {
public:
    explicit UnknownExperiment(std::string_view name);
};

/// A one-variable rate sweep.
struct SweepSpec {
    SweepVariable variable = SweepVariable::sigma_u2;
    std::vector<double> values;
    std::vector<IrsMode> modes;
    std::vector<Fidelity> fidelities;
    std::int64_t trials = 0;
    std::vector<int> n_values;
};

/// Throws std::invalid_argument for an empty or non-increasing grid, or
/// empty mode/fidelity/N lists.
void check_sweep(const SweepSpec& spec);

struct ResultRow {
    std::string variable;
    double value = 0.0;
    int N = 0;
    int M = 0;
    IrsMode mode = IrsMode::random;
    Fidelity fidelity = Fidelity::analytic;
    double rate = 0.0;
    double rate_perfect_csi = 0.0;
    double normalized_rate = 0.0;
    std::optional<double> ci_half_width;
    std::uint64_t seed = 0;
    std::int64_t trials = 0;
};

const std::vector<std::string>& result_header();
std::vector<std::string> to_fields(const ResultRow& row);

/// Evaluates every (N, grid point, mode, fidelity) combination of `spec`.
/// Perfect-CSI references use the same fidelity as the row.
std::vector<ResultRow> run_sweep(const SystemConfig& base, const SweepSpec& spec, unsigned workers,
                                 int subset_size);

struct ExperimentOptions {
    std::int64_t trials = 1000;
    unsigned workers = 0;
    int subset_size = 16;
    std::optional<std::vector<double>> grid;
    std::optional<std::vector<int>> n_values;
    std::optional<std::vector<Fidelity>> fidelities;
};

struct ExperimentResult {
    std::string csv;
    SystemConfig config;        // configuration after experiment-pinned values
    nlohmann::json parameters;  // sweep or grid description
};

/// Runs a registered experiment. Throws UnknownExperiment for unregistered
/// names and ConfigError for invalid configurations.
ExperimentResult run_experiment(const SystemConfig& config, std::string_view name,
                                const ExperimentOptions& options);

/// git-style object hash: SHA-1 of "blob <size>\0" followed by the content.
std::string git_blob_hash(std::string_view content);

/// Run manifest: resolved configuration, derived parameters, experiment
/// parameters, seed and content hashes of the inputs and of the CSV.
nlohmann::json make_manifest(std::string_view experiment, const ExperimentResult& result,
                             const ExperimentOptions& options);

}  // namespace irspn

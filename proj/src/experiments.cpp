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

#include "irspn/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include <openssl/evp.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "irspn/channel.hpp"
#include "irspn/closed_form.hpp"
#include "irspn/csv.hpp"
#include "irspn/mmse_estimator.hpp"
#include "irspn/phase_noise.hpp"
#include "irspn/uplink_pilots.hpp"

namespace irspn {

namespace {

constexpr std::array<ExperimentInfo, 6> registry{{
    {"fig2", "ergodic rate vs uplink noise sigma_u2, ideal oscillators, N from config",
     "Fig. 2(a)"},
    {"fig2b", "normalized ergodic rate vs sigma_u2 for N in {16, 32, 64}", "Fig. 2(b)"},
    {"fig3", "ergodic rate vs common oscillator constant zeta, beta/sigma_u2 = 20 dB",
     "Fig. 3(a)"},
    {"fig3b", "normalized ergodic rate vs zeta for N in {16, 32, 64}", "Fig. 3(b)"},
    {"oracle", "measured vs closed-form vs exact SNR moments over an (M, N) grid",
     "averaged-SNR derivation"},
    {"properties", "identity and monotonicity checks of the estimator and gain expressions",
     "estimator and gain identities"},
}};

const std::vector<double> default_sigma_u2_grid = {1e-10, 1e-9, 1e-8, 1e-7, 1e-6, 1e-5};
const std::vector<double> default_zeta_grid = {1e-22, 1e-21, 1e-20, 1e-19, 1e-18};
const std::vector<int> panel_b_n_values = {16, 32, 64};

nlohmann::json spec_to_json(const SweepSpec& spec) {
    nlohmann::json modes = nlohmann::json::array();
    for (auto m : spec.modes) modes.push_back(std::string(to_string(m)));
    nlohmann::json fidelities = nlohmann::json::array();
    for (auto f : spec.fidelities) fidelities.push_back(std::string(to_string(f)));
    return {{"variable", std::string(to_string(spec.variable))},
            {"values", spec.values},
            {"modes", modes},
            {"fidelities", fidelities},
            {"trials", spec.trials},
            {"n_values", spec.n_values}};
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream out;
    CsvWriter writer(out);
    writer.row(result_header());
    for (const auto& row : rows) writer.row(to_fields(row));
    return out.str();
}

ExperimentResult sweep_experiment(SystemConfig config, std::string_view name,
                                  const ExperimentOptions& options) {
    SweepSpec spec;
    spec.modes = {IrsMode::random, IrsMode::optimized};
    spec.fidelities = options.fidelities.value_or(std::vector{Fidelity::analytic, Fidelity::simplified});
    spec.trials = options.trials;
    const bool panel_b = name.back() == 'b';
    spec.n_values = options.n_values.value_or(panel_b ? panel_b_n_values : std::vector<int>{config.N});

    nlohmann::json pinned;
    if (name.starts_with("fig2")) {
        spec.variable = SweepVariable::sigma_u2;
        spec.values = options.grid.value_or(default_sigma_u2_grid);
        config.zeta_BS = 0.0;
        config.zeta_UE = 0.0;
        pinned = {{"zeta_BS", 0.0}, {"zeta_UE", 0.0}};
    } else {
        spec.variable = SweepVariable::zeta_common;
        spec.values = options.grid.value_or(default_zeta_grid);
        // beta_cas / sigma_u2 = 20 dB
        config.sigma_u2 = validate(config).beta_cas / 100.0;
        pinned = {{"sigma_u2", config.sigma_u2}};
    }
    check_sweep(spec);
    validate(config);

    const auto rows = run_sweep(config, spec, options.workers, options.subset_size);
    ExperimentResult result;
    result.csv = rows_to_csv(rows);
    result.config = config;
    result.parameters = {{"sweep", spec_to_json(spec)},
                         {"pinned", pinned},
                         {"subset_size", options.subset_size}};
    return result;
}

// ---------------------------------------------------------------------------
// oracle

ExperimentResult oracle_experiment(const SystemConfig& config, const ExperimentOptions& options) {
    const std::vector<std::pair<int, int>> grid = {{4, 8}, {16, 16}, {32, 64}};
    const std::vector<std::string> header = {
        "M", "N", "mode", "t", "eta", "trials",
        "denominator_measured", "denominator_half_width", "denominator_closed_form", "denominator_exact",
        "numerator_measured", "numerator_half_width", "numerator_closed_form", "numerator_exact",
        "row_moment_measured", "row_moment_half_width", "row_moment_closed_form", "row_moment_exact",
        "denominator_gap", "numerator_gap", "row_moment_gap", "snr_closed_form", "snr_exact",
        "snr_gap", "exact_within_ci"};

    std::ostringstream out;
    CsvWriter writer(out);
    writer.row(header);
    const StreamTree root(config.seed);
    RunOptions run{options.trials, options.workers};
    nlohmann::json points = nlohmann::json::array();

    for (std::size_t g = 0; g < grid.size(); ++g) {
        SystemConfig point = config;
        point.M = grid[g].first;
        point.N = grid[g].second;
        point.B = point.N;
        const auto link = link_params(point);
        const int t = link.T;
        points.push_back({{"M", point.M}, {"N", point.N}, {"t", t}});
        for (auto mode : {IrsMode::random, IrsMode::optimized}) {
            const auto report = fourth_moment_oracle(link, t, mode, run, root.child(g));
            const double e = report.eta;
            const double n = link.N;
            const double den_cf = precoder_power(link.M, link.N, e, mode);
            const double den_ex = exact_precoder_power(link.M, link.N, e, mode);
            const double num_cf = closed_form_beamforming_moment(link.M, link.N, link.beta_cas, e, mode);
            const double num_ex = exact_beamforming_moment(link.M, link.N, link.beta_cas, e, mode);
            const double row_cf = mode == IrsMode::random ? n * e : n * n * std::numbers::pi * e / 4.0;
            const double row_ex = mode == IrsMode::random ? n * e : exact_aligned_moment(link.N, e);
            const double snr_cf = avg_snr(t, link, mode);
            const double snr_ex = exact_avg_snr(t, link, mode);
            const bool within = std::abs(report.denominator.mean - den_ex) <= report.denominator.half_width &&
                                std::abs(report.numerator.mean - num_ex) <= report.numerator.half_width &&
                                std::abs(report.aligned_row.mean - row_ex) <= report.aligned_row.half_width;
            writer.row({std::to_string(link.M), std::to_string(link.N), std::string(to_string(mode)),
                        std::to_string(t), format_number(e), std::to_string(report.trials),
                        format_number(report.denominator.mean), format_number(report.denominator.half_width),
                        format_number(den_cf), format_number(den_ex),
                        format_number(report.numerator.mean), format_number(report.numerator.half_width),
                        format_number(num_cf), format_number(num_ex),
                        format_number(report.aligned_row.mean), format_number(report.aligned_row.half_width),
                        format_number(row_cf), format_number(row_ex),
                        format_number(report.denominator.mean / den_cf - 1.0),
                        format_number(report.numerator.mean / num_cf - 1.0),
                        format_number(report.aligned_row.mean / row_cf - 1.0),
                        format_number(snr_cf), format_number(snr_ex), format_number(snr_ex / snr_cf - 1.0),
                        within ? "true" : "false"});
        }
    }
    ExperimentResult result;
    result.csv = out.str();
    result.config = config;
    result.parameters = {{"grid", points}, {"trials", options.trials}};
    return result;
}

// ---------------------------------------------------------------------------
// properties

struct PropertyRow {
    std::string name;
    double measured;
    double threshold;
    bool pass;
};

std::vector<int> times_up_to(int B) {
    std::vector<int> out(static_cast<std::size_t>(B));
    for (int i = 0; i < B; ++i) out[static_cast<std::size_t>(i)] = i + 1;
    return out;
}

std::vector<PropertyRow> property_checks(const SystemConfig& config) {
    const auto link = link_params(config);
    std::vector<PropertyRow> rows;
    RandomStream rng(StreamTree(config.seed).child(0xF00D).seed());

    {
        double worst = 0.0;
        for (int N : {1, 2, 3, 4, 8}) {
            const auto sched = dft_schedule(N, N, times_up_to(N));
            for (int t : {N + 1, N + 7, config.T}) {
                const auto d = decay_matrix(t, sched.pilot_times, sched.pilot_symbols, 0.01, 0.02);
                const auto psi = estimate_covariance(sched, d, link.beta_cas, link.sigma_u2, 3, N);
                const auto c = error_covariance(sched, d, link.beta_cas, link.sigma_u2, 3, N);
                const CMatrix sum = psi.expand() + c.expand();
                const CMatrix target = link.beta_cas * CMatrix::Identity(sum.rows(), sum.cols());
                worst = std::max(worst, (sum - target).cwiseAbs().maxCoeff());
            }
        }
        rows.push_back({"psi_plus_error_covariance_equals_beta_identity", worst, 1e-10, worst < 1e-10});
    }
    {
        double worst = 0.0;
        for (int M = 1; M <= 4; ++M) {
            for (int N = 1; N <= 4; ++N) {
                const auto sched = dft_schedule(N, N, times_up_to(N));
                const auto ch = sample_cascaded(M, N, 1.0, rng);
                const auto traj = sample_trajectories(M, N, 0.1, 0.05, rng);
                for (Index i = 0; i < N; ++i) {
                    const CVector direct = uplink_block(ch.H, traj, sched, i);
                    const CMatrix D = drift_matrix(traj, sched.pilot_times[static_cast<std::size_t>(i)]).dense();
                    const CMatrix left = Eigen::kroneckerProduct(sched.Phi.row(i), CMatrix::Identity(M, M)).eval();
                    const CMatrix mid = Eigen::kroneckerProduct(CMatrix::Identity(N, N), D).eval();
                    const CVector kron = left * mid * ch.h * sched.pilot_symbols(i);
                    worst = std::max(worst, (kron - direct).cwiseAbs().maxCoeff());
                }
            }
        }
        rows.push_back({"uplink_direct_equals_kronecker_form", worst, 1e-12, worst < 1e-12});
    }
    {
        double worst = 0.0;
        for (int N = 1; N <= 64; ++N) {
            const auto sched = dft_schedule(N, N, times_up_to(N));
            const CMatrix gram = sched.Phi.adjoint() * sched.Phi;
            worst = std::max(worst, (gram - N * CMatrix::Identity(N, N)).cwiseAbs().maxCoeff());
        }
        rows.push_back({"dft_schedule_orthogonality", worst, 1e-10, worst < 1e-10});
    }
    {
        double worst = 0.0;
        double worst_trace = 0.0;
        for (int N : {1, 4, 16, 64}) {
            for (double su2 : {0.0, 1e-9, 1e-7, 1e-5}) {
                for (double s : {0.0, 1e-6, 1e-3}) {
                    const int t = N + 37;
                    const double e = eta(t, N, link.beta_cas, su2, s, s).value;
                    const double a = eta_asymptote(t, N, link.beta_cas, s, s);
                    const double expected = N * link.beta_cas / (N * link.beta_cas + su2);
                    worst = std::max(worst, std::abs(e / a - expected) / expected);

                    const auto sched = dft_schedule(N, N, times_up_to(N));
                    const auto d = decay_matrix(t, sched.pilot_times, sched.pilot_symbols, s, s);
                    const double tr = estimate_covariance(sched, d, link.beta_cas, su2, 2, N).trace();
                    worst_trace = std::max(worst_trace, std::abs(tr - 2.0 * N * e) / (2.0 * N * e));
                }
            }
        }
        rows.push_back({"eta_over_asymptote_equals_pilot_gain", worst, 1e-12, worst < 1e-12});
        rows.push_back({"trace_psi_equals_MN_eta", worst_trace, 1e-10, worst_trace < 1e-10});
    }
    {
        double minimum = 1.0;
        int violations = 0;
        for (int k = 0; k < 200; ++k) {
            const int N = 2 + static_cast<int>(std::floor(rng.uniform() * 255));
            const int t = N + 1 + static_cast<int>(std::floor(rng.uniform() * 500));
            const bool zero = k % 10 == 0;
            const double sb = zero ? 0.0 : std::pow(10.0, -8.0 + 6.0 * rng.uniform());
            const double su = zero ? 0.0 : std::pow(10.0, -8.0 + 6.0 * rng.uniform());
            const double gap = eta_gap(N, t, 1.0, sb, su);
            minimum = std::min(minimum, gap);
            if ((std::abs(gap) < 1e-15) != zero) ++violations;
        }
        rows.push_back({"eta_gap_non_negative", minimum, -1e-15, minimum >= -1e-15});
        rows.push_back({"eta_gap_zero_iff_ideal_oscillators", static_cast<double>(violations), 0.0, violations == 0});
    }
    {
        int violations = 0;
        for (int N : {2, 8, 16, 64}) {
            for (int t = N + 1; t <= N + 400; t += 57) {
                double previous = std::numeric_limits<double>::infinity();
                for (double su2 : {0.0, 1e-10, 1e-8, 1e-6, 1e-4}) {
                    const double e = eta(t, N, 1e-7, su2, 1e-5, 1e-5).value;
                    if (e > previous) ++violations;
                    previous = e;
                }
                previous = std::numeric_limits<double>::infinity();
                for (double s : {0.0, 1e-7, 1e-5, 1e-3, 1e-1}) {
                    const double e = eta(t, N, 1e-7, 1e-9, s, s).value;
                    if (e > previous) ++violations;
                    previous = e;
                }
            }
        }
        rows.push_back({"eta_non_increasing_in_noise", static_cast<double>(violations), 0.0, violations == 0});
    }
    return rows;
}

ExperimentResult properties_experiment(const SystemConfig& config) {
    std::ostringstream out;
    CsvWriter writer(out);
    writer.row({"property", "measured", "threshold", "pass"});
    for (const auto& row : property_checks(config))
        writer.row({row.name, format_number(row.measured), format_number(row.threshold),
                    row.pass ? "true" : "false"});
    ExperimentResult result;
    result.csv = out.str();
    result.config = config;
    result.parameters = nlohmann::json::object();
    return result;
}

}  // namespace

std::span<const ExperimentInfo> list_experiments() { return registry; }

std::string experiment_listing(bool machine_readable) {
    std::ostringstream out;
    for (const auto& info : registry) {
        if (machine_readable)
            out << info.name << '\t' << info.anchor << '\t' << info.description << '\n';
        else
            out << std::left << std::setw(12) << info.name << info.description << " [" << info.anchor << "]\n";
    }
    return out.str();
}

UnknownExperiment::UnknownExperiment(std::string_view name)
    : std::invalid_argument([name] {
          std::string message = "unknown experiment '" + std::string(name) + "'; available:";
          for (const auto& info : registry) message += " " + std::string(info.name);
          return message;
      }()) {}

void check_sweep(const SweepSpec& spec) {
    if (spec.values.empty()) throw std::invalid_argument("sweep grid is empty");
    for (std::size_t i = 1; i < spec.values.size(); ++i)
        if (!(spec.values[i] > spec.values[i - 1]))
            throw std::invalid_argument("sweep grid must be strictly increasing");
    if (spec.modes.empty()) throw std::invalid_argument("sweep needs at least one IRS mode");
    if (spec.fidelities.empty()) throw std::invalid_argument("sweep needs at least one fidelity");
    if (spec.n_values.empty()) throw std::invalid_argument("sweep needs at least one N");
    if (spec.trials < 1) throw std::invalid_argument("sweep needs at least one trial");
}

const std::vector<std::string>& result_header() {
    static const std::vector<std::string> header = {
        "variable", "value", "N", "M", "mode", "fidelity", "rate", "rate_perfect_csi",
        "normalized_rate", "ci_half_width", "seed", "trials"};
    return header;
}

std::vector<std::string> to_fields(const ResultRow& row) {
    return {row.variable,
            format_number(row.value),
            std::to_string(row.N),
            std::to_string(row.M),
            std::string(to_string(row.mode)),
            std::string(to_string(row.fidelity)),
            format_number(row.rate),
            format_number(row.rate_perfect_csi),
            format_number(row.normalized_rate),
            row.ci_half_width ? format_number(*row.ci_half_width) : std::string(),
            std::to_string(row.seed),
            std::to_string(row.trials)};
}

std::vector<ResultRow> run_sweep(const SystemConfig& base, const SweepSpec& spec, unsigned workers,
                                 int subset_size) {
    check_sweep(spec);
    const StreamTree root(base.seed);
    const RunOptions run{spec.trials, workers};
    std::vector<ResultRow> rows;

    for (int n : spec.n_values) {
        SystemConfig per_n = base;
        apply_sweep_value(per_n, SweepVariable::N, n);
        const auto n_tree = root.child(static_cast<std::uint64_t>(n));

        // Perfect-CSI references depend only on N, mode and fidelity. All grid
        // points and the references share one stream tree (common random
        // numbers), so simulated curves and rate ratios vary smoothly.
        std::map<std::pair<IrsMode, Fidelity>, RateEstimate> perfect;
        for (std::size_t k = 0; k < spec.values.size(); ++k) {
            SystemConfig point = per_n;
            apply_sweep_value(point, spec.variable, spec.values[k]);
            const auto link = link_params(point);
            for (auto mode : spec.modes) {
                for (auto fidelity : spec.fidelities) {
                    const auto key = std::pair{mode, fidelity};
                    if (!perfect.contains(key))
                        perfect[key] = ergodic_rate_estimate(perfect_csi(link), mode, fidelity, run,
                                                             n_tree, subset_size);
                    const auto estimate =
                        ergodic_rate_estimate(link, mode, fidelity, run, n_tree, subset_size);
                    const bool analytic = fidelity == Fidelity::analytic;
                    ResultRow row;
                    row.variable = std::string(to_string(spec.variable));
                    row.value = spec.values[k];
                    row.N = link.N;
                    row.M = link.M;
                    row.mode = mode;
                    row.fidelity = fidelity;
                    row.rate = estimate.rate;
                    row.rate_perfect_csi = perfect[key].rate;
                    row.normalized_rate = estimate.rate / perfect[key].rate;
                    if (!analytic) row.ci_half_width = estimate.half_width;
                    row.seed = base.seed;
                    row.trials = analytic ? 0 : spec.trials;
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

ExperimentResult run_experiment(const SystemConfig& config, std::string_view name,
                                const ExperimentOptions& options) {
    const bool known = std::any_of(registry.begin(), registry.end(),
                                   [name](const ExperimentInfo& info) { return info.name == name; });
    if (!known) throw UnknownExperiment(name);
    validate(config);
    if (options.trials < 1) throw std::invalid_argument("trials must be positive");
    if (options.subset_size < 1) throw std::invalid_argument("subset size must be positive");

    if (name == "oracle") return oracle_experiment(config, options);
    if (name == "properties") return properties_experiment(config);
    return sweep_experiment(config, name, options);
}

std::string git_blob_hash(std::string_view content) {
    const std::string prefix = "blob " + std::to_string(content.size()) + '\0';
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw std::runtime_error("git_blob_hash: cannot allocate digest context");
    const bool ok = EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) == 1 &&
                    EVP_DigestUpdate(ctx, prefix.data(), prefix.size()) == 1 &&
                    EVP_DigestUpdate(ctx, content.data(), content.size()) == 1 &&
                    EVP_DigestFinal_ex(ctx, digest.data(), &length) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok) throw std::runtime_error("git_blob_hash: SHA-1 failed");

    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

nlohmann::json make_manifest(std::string_view experiment, const ExperimentResult& result,
                             const ExperimentOptions& options) {
    const auto derived = validate(result.config);
    const nlohmann::json inputs = {{"experiment", experiment},
                                   {"config", config_to_json(result.config)},
                                   {"parameters", result.parameters},
                                   {"trials", options.trials}};
    return {{"experiment", experiment},
            {"config", config_to_json(result.config)},
            {"derived",
             {{"beta_cas", derived.beta_cas},
              {"sigma_BS2", derived.sigma_BS2},
              {"sigma_UE2", derived.sigma_UE2},
              {"P", derived.P},
              {"sigma_d2", derived.sigma_d2},
              {"pilot_times", derived.pilot_times}}},
            {"parameters", result.parameters},
            {"seed", result.config.seed},
            {"trials", options.trials},
            {"workers", options.workers},
            {"input_hash", git_blob_hash(inputs.dump())},
            {"output_hash", git_blob_hash(result.csv)}};
}

}  // namespace irspn

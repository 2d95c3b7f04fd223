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

#include "irspn/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "irspn/channel.hpp"
#include "irspn/mmse_estimator.hpp"
#include "irspn/phase_noise.hpp"
#include "irspn/uplink_pilots.hpp"

namespace irspn {

namespace {

constexpr double z95 = 1.96;

void require_trials(const RunOptions& options) {
    if (options.trials < 1) throw std::invalid_argument("Monte Carlo needs at least one trial");
}

CMatrix draw_matrix(Index M, Index N, double variance, RandomStream& rng) {
    CMatrix X(M, N);
    for (Index n = 0; n < N; ++n)
        for (Index m = 0; m < M; ++m) X(m, n) = rng.cscg(variance);
    return X;
}

IrsPhaseVector choose_irs(IrsMode mode, const RunOptions& options, const CMatrix& H_hat,
                          const CMatrix& H_eff, RandomStream& irs_rng) {
    if (mode == IrsMode::random) return random_irs(H_hat.cols(), irs_rng);
    if (options.rule == OptimizeRule::effective_sum) return optimize_irs_effective_sum(H_eff);
    return optimize_irs(H_hat, options.reference_row);
}

// One trial of the independent-estimate model.
struct SimplifiedTrial {
    double numerator;
    double denominator;
    double aligned_row;
    double snr;
};

SimplifiedTrial simplified_trial(const LinkParams& link, double eta_t, double norm_const,
                                 IrsMode mode, const RunOptions& options,
                                 const StreamTree& streams, std::int64_t trial) {
    const auto index = static_cast<std::uint64_t>(trial);
    auto est_rng = streams.stream(index, Purpose::estimate);
    auto err_rng = streams.stream(index, Purpose::estimate_error);
    auto irs_rng = streams.stream(index, Purpose::irs_phase);

    const CMatrix H_hat = draw_matrix(link.M, link.N, eta_t, est_rng);
    const CMatrix H_eff = H_hat + draw_matrix(link.M, link.N, std::max(0.0, link.beta_cas - eta_t), err_rng);
    const auto phi = choose_irs(mode, options, H_hat, H_eff, irs_rng);

    const CVector s = H_hat * phi.phi;
    const CVector g = H_eff * phi.phi;
    const Complex cross = g.cwiseProduct(s.conjugate()).sum();
    const Complex row = s(options.reference_row);

    const auto w = mrt_precoder(H_hat, phi, norm_const);
    const double snr = instantaneous_snr(vectorize(H_eff), phi, w.w, link.P, link.sigma_d2);
    return {std::norm(cross), s.squaredNorm(), std::norm(row), snr};
}

void check_symbol(const LinkParams& link, int t) {
    if (t <= link.N || t > link.T)
        throw std::invalid_argument("symbol " + std::to_string(t) + " is not a downlink symbol");
}

}  // namespace

MomentEstimate summarize(std::span<const double> samples) {
    if (samples.empty()) return {};
    const double n = static_cast<double>(samples.size());
    double sum = 0.0;
    for (double x : samples) sum += x;
    const double mean = sum / n;
    if (samples.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / (n - 1.0));
    return {mean, z95 * sd / std::sqrt(n)};
}

SnrSummary simulate_simplified(const LinkParams& link, int t, IrsMode mode,
                               const RunOptions& options, const StreamTree& streams) {
    require_trials(options);
    check_symbol(link, t);
    const double eta_t = eta(t, link);
    const double norm_const = std::sqrt(precoder_power(link.M, link.N, eta_t, mode));

    std::vector<double> snr(static_cast<std::size_t>(options.trials));
    for_each_trial(options.trials, options.workers, [&](std::int64_t i) {
        snr[static_cast<std::size_t>(i)] =
            simplified_trial(link, eta_t, norm_const, mode, options, streams, i).snr;
    });
    const auto stats = summarize(snr);
    return {stats.mean, stats.half_width, options.trials, t, mode, Fidelity::simplified};
}

SnrSummary simulate_full(const LinkParams& link, int t, IrsMode mode, const RunOptions& options,
                         const StreamTree& streams) {
    require_trials(options);
    check_symbol(link, t);
    const Index M = link.M;
    const Index N = link.N;

    std::vector<int> pilot_times(static_cast<std::size_t>(N));
    for (Index i = 0; i < N; ++i) pilot_times[static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
    const auto sched = dft_schedule(N, N, pilot_times);
    const auto dtilde = decay_matrix(t, sched.pilot_times, sched.pilot_symbols, link.sigma_BS2, link.sigma_UE2);
    const MmseEstimator estimator(sched, dtilde, link.beta_cas, link.sigma_u2, M);
    const double norm_const = std::sqrt(precoder_power(link.M, link.N, eta(t, link), mode));

    std::vector<double> snr(static_cast<std::size_t>(options.trials));
    for_each_trial(options.trials, options.workers, [&](std::int64_t i) {
        const auto index = static_cast<std::uint64_t>(i);
        auto ch_rng = streams.stream(index, Purpose::channel);
        auto pn_rng = streams.stream(index, Purpose::phase_noise);
        auto ul_rng = streams.stream(index, Purpose::uplink_noise);
        auto irs_rng = streams.stream(index, Purpose::irs_phase);

        const auto channel = sample_cascaded(M, N, link.beta_cas, ch_rng);
        const auto traj = sample_trajectories(M, t, link.sigma_BS2, link.sigma_UE2, pn_rng);
        const auto obs = simulate_uplink(channel.h, traj, sched, link.sigma_u2, ul_rng);
        const CMatrix H_hat = estimator.apply_matrix(obs.psi);
        const CMatrix H_eff = drift_matrix(traj, t).entries.asDiagonal() * channel.H;

        const auto phi = choose_irs(mode, options, H_hat, H_eff, irs_rng);
        const auto w = mrt_precoder(H_hat, phi, norm_const);
        snr[static_cast<std::size_t>(i)] = instantaneous_snr(vectorize(H_eff), phi, w.w, link.P, link.sigma_d2);
    });
    const auto stats = summarize(snr);
    return {stats.mean, stats.half_width, options.trials, t, mode, Fidelity::full};
}

FourthMomentReport fourth_moment_oracle(const LinkParams& link, int t, IrsMode mode,
                                        const RunOptions& options, const StreamTree& streams) {
    require_trials(options);
    check_symbol(link, t);
    const double eta_t = eta(t, link);
    const double norm_const = std::sqrt(precoder_power(link.M, link.N, eta_t, mode));

    const auto n = static_cast<std::size_t>(options.trials);
    std::vector<double> numerator(n), denominator(n), aligned(n);
    for_each_trial(options.trials, options.workers, [&](std::int64_t i) {
        const auto r = simplified_trial(link, eta_t, norm_const, mode, options, streams, i);
        const auto k = static_cast<std::size_t>(i);
        numerator[k] = r.numerator;
        denominator[k] = r.denominator;
        aligned[k] = r.aligned_row;
    });
    return {summarize(numerator), summarize(denominator), summarize(aligned), eta_t, options.trials};
}

std::string_view to_string(SweepVariable variable) {
    switch (variable) {
        case SweepVariable::sigma_u2: return "sigma_u2";
        case SweepVariable::zeta_common: return "zeta_common";
        case SweepVariable::N: return "N";
    }
    return "?";
}

SweepVariable parse_sweep_variable(std::string_view text) {
    if (text == "sigma_u2") return SweepVariable::sigma_u2;
    if (text == "zeta_common") return SweepVariable::zeta_common;
    if (text == "N") return SweepVariable::N;
    throw std::invalid_argument("unknown sweep variable '" + std::string(text) + "'");
}

void apply_sweep_value(SystemConfig& config, SweepVariable variable, double value) {
    switch (variable) {
        case SweepVariable::sigma_u2:
            config.sigma_u2 = value;
            break;
        case SweepVariable::zeta_common:
            config.zeta_BS = value;
            config.zeta_UE = value;
            break;
        case SweepVariable::N: {
            const double rounded = std::round(value);
            if (rounded != value || rounded < 1.0)
                throw std::invalid_argument("N sweep values must be positive integers");
            config.N = static_cast<int>(rounded);
            config.B = config.N;
            break;
        }
    }
}

std::vector<int> downlink_subset(const LinkParams& link, int count) {
    const int first = link.first_downlink();
    const int size = link.T - link.N;
    std::vector<int> out;
    if (count >= size) {
        for (int t = first; t <= link.T; ++t) out.push_back(t);
        return out;
    }
    if (count <= 1) return {first + (size - 1) / 2};
    for (int k = 0; k < count; ++k) {
        const int t = first + static_cast<int>(std::lround(static_cast<double>(k) * (size - 1) / (count - 1)));
        if (out.empty() || out.back() != t) out.push_back(t);
    }
    return out;
}

RateEstimate ergodic_rate_estimate(const LinkParams& link, IrsMode mode, Fidelity fidelity,
                                   const RunOptions& options, const StreamTree& streams,
                                   int subset_size) {
    if (fidelity == Fidelity::analytic) return {analytic_rate(link, mode), 0.0};

    const auto nodes = downlink_subset(link, subset_size);
    std::vector<double> ratio, rel_half;
    ratio.reserve(nodes.size());
    rel_half.reserve(nodes.size());
    for (int t : nodes) {
        const auto child = streams.child(static_cast<std::uint64_t>(t));
        const auto summary = fidelity == Fidelity::simplified
                                 ? simulate_simplified(link, t, mode, options, child)
                                 : simulate_full(link, t, mode, options, child);
        const double reference = avg_snr(t, link, mode);
        ratio.push_back(summary.mean / reference);
        rel_half.push_back(summary.half_width / reference);
    }

    auto interpolate = [&nodes](const std::vector<double>& values, int t) {
        if (nodes.size() == 1 || t <= nodes.front()) return values.front();
        if (t >= nodes.back()) return values.back();
        const auto upper = std::upper_bound(nodes.begin(), nodes.end(), t);
        const auto k = static_cast<std::size_t>(upper - nodes.begin());
        const double x0 = nodes[k - 1];
        const double x1 = nodes[k];
        const double a = (t - x0) / (x1 - x0);
        return (1.0 - a) * values[k - 1] + a * values[k];
    };

    double rate_sum = 0.0;
    double half_sum = 0.0;
    for (int t = link.first_downlink(); t <= link.T; ++t) {
        const double reference = avg_snr(t, link, mode);
        const double snr = interpolate(ratio, t) * reference;
        rate_sum += std::log2(1.0 + snr);
        half_sum += interpolate(rel_half, t) * reference / ((1.0 + snr) * std::numbers::ln2);
    }
    return {rate_sum / link.T, half_sum / link.T};
}

std::vector<RateCurvePoint> rate_curve(const SystemConfig& config, IrsMode mode,
                                       Fidelity fidelity, const RunOptions& options,
                                       SweepVariable variable, std::span<const double> grid,
                                       int subset_size) {
    if (grid.empty()) throw std::invalid_argument("rate_curve: empty grid");
    const StreamTree root(config.seed);
    std::vector<RateCurvePoint> out;
    out.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        SystemConfig point = config;
        apply_sweep_value(point, variable, grid[k]);
        const auto link = link_params(point);
        out.push_back({grid[k], ergodic_rate_estimate(link, mode, fidelity, options, root, subset_size)});
    }
    return out;
}

}  // namespace irspn

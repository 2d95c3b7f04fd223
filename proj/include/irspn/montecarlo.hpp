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
#include <span>
#include <thread>
#include <vector>

#include "irspn/closed_form.hpp"
#include "irspn/config.hpp"
#include "irspn/downlink.hpp"
#include "irspn/rng.hpp"
#include "irspn/types.hpp"

namespace irspn {

struct SnrSummary {
    double mean = 0.0;
    double half_width = 0.0;  // 95% confidence: 1.96 * sample_std / sqrt(trials)
    std::int64_t trials = 0;
    int t = 0;
    IrsMode mode = IrsMode::random;
    Fidelity fidelity = Fidelity::simplified;
};

struct MomentEstimate {
    double mean = 0.0;
    double half_width = 0.0;
};

struct RunOptions {
    std::int64_t trials = 10000;
    unsigned workers = 0;  // 0: hardware concurrency
    OptimizeRule rule = OptimizeRule::estimate_row;
    Index reference_row = 0;
};

MomentEstimate summarize(std::span<const double> samples);

/// Runs `body(trial)` for trial = 0..trials-1 on up to `workers` threads.
/// Trials are split into contiguous ranges; callers write results to
/// per-trial slots and reduce them in trial order.
template <typename Body>
void for_each_trial(std::int64_t trials, unsigned workers, Body&& body) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    const auto count = static_cast<std::int64_t>(workers);
    if (count <= 1 || trials < 2 * count) {
        for (std::int64_t i = 0; i < trials; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::int64_t w = 0; w < count; ++w) {
        const std::int64_t begin = trials * w / count;
        const std::int64_t end = trials * (w + 1) / count;
        pool.emplace_back([begin, end, &body] {
            for (std::int64_t i = begin; i < end; ++i) body(i);
        });
    }
}

/// Mean SNR at symbol t when the estimate is drawn as CN(0, eta I_MN) and the
/// estimation error as an independent CN(0, (beta - eta) I_MN). The precoder
/// uses the analytic normalisation `precoder_power`.
SnrSummary simulate_simplified(const LinkParams& link, int t, IrsMode mode,
                               const RunOptions& options, const StreamTree& streams);

/// Mean SNR at symbol t through the whole chain: channel draw, Wiener phase
/// paths over 1..t, DFT pilots with noise, MMSE estimate for symbol t, IRS
/// and MRT from the estimate, SNR against the drifted true channel.
SnrSummary simulate_full(const LinkParams& link, int t, IrsMode mode, const RunOptions& options,
                         const StreamTree& streams);

/// Separate estimates of the two expectations forming the mean SNR,
/// E|(H_eff phi)^T (H_hat phi)^*|^2 and E||H_hat phi||^2, plus the reference
/// row term E|h_hat_row phi|^2 (= E[(sum |h_hat_row(n)|)^2] for optimized IRS),
/// under the independent-estimate model.
struct FourthMomentReport {
    MomentEstimate numerator;
    MomentEstimate denominator;
    MomentEstimate aligned_row;
    double eta = 0.0;
    std::int64_t trials = 0;
};

FourthMomentReport fourth_moment_oracle(const LinkParams& link, int t, IrsMode mode,
                                        const RunOptions& options, const StreamTree& streams);

// ---------------------------------------------------------------------------
// Rate sweeps

enum class SweepVariable { sigma_u2, zeta_common, N };

std::string_view to_string(SweepVariable variable);
SweepVariable parse_sweep_variable(std::string_view text);

/// Sets the swept quantity; sweeping N keeps B = N.
void apply_sweep_value(SystemConfig& config, SweepVariable variable, double value);

struct RateEstimate {
    double rate = 0.0;
    double half_width = 0.0;  // 0 for analytic fidelity
};

/// Evenly spread downlink symbols N+1..T used by Monte Carlo rate estimates.
std::vector<int> downlink_subset(const LinkParams& link, int count);

/// Ergodic rate of one link.
///
/// Analytic fidelity evaluates the closed form at every downlink symbol.
/// Monte Carlo fidelities simulate `subset_size` spread-out symbols, linearly
/// interpolate the ratio of simulated to closed-form SNR between them and
/// apply it to the closed-form SNR of every downlink symbol. The half-width
/// is the delta-method propagation of the per-symbol SNR half-widths.
RateEstimate ergodic_rate_estimate(const LinkParams& link, IrsMode mode, Fidelity fidelity,
                                   const RunOptions& options, const StreamTree& streams,
                                   int subset_size = 16);

struct RateCurvePoint {
    double value = 0.0;
    RateEstimate rate;
};

/// Rate along a sweep of one configuration variable. Every grid point draws
/// from the same stream tree (seeded by config.seed), so Monte Carlo curves
/// use common random numbers.
std::vector<RateCurvePoint> rate_curve(const SystemConfig& config, IrsMode mode,
                                       Fidelity fidelity, const RunOptions& options,
                                       SweepVariable variable, std::span<const double> grid,
                                       int subset_size = 16);

}  // namespace irspn

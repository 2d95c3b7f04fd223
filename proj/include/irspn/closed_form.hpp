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

#include <span>
#include <vector>

#include "irspn/config.hpp"
#include "irspn/types.hpp"

namespace irspn {

/// Linear-unit link parameters consumed by the analytic expressions and the
/// Monte Carlo harness. Pilots occupy symbols 1..N (B = N), the downlink set
/// is N+1..T.
struct LinkParams {
    int M = 0;
    int N = 0;
    int T = 0;
    double beta_cas = 0.0;
    double sigma_u2 = 0.0;
    double sigma_BS2 = 0.0;
    double sigma_UE2 = 0.0;
    double P = 0.0;
    double sigma_d2 = 0.0;

    double snr_scale() const { return P / sigma_d2; }
    double phase_variance() const { return sigma_BS2 + sigma_UE2; }
    int first_downlink() const { return N + 1; }
};

/// Validates `config` and converts it. Throws ConfigError, including when
/// B != N (the estimator and the gain expression need the square schedule).
LinkParams link_params(const SystemConfig& config);

/// Same link with noiseless pilots and ideal oscillators.
LinkParams perfect_csi(LinkParams link);

struct EtaValue {
    double value = 0.0;
    int t = 0;
    int N = 0;
    double beta_cas = 0.0;
    double sigma_u2 = 0.0;
    double sigma_BS2 = 0.0;
    double sigma_UE2 = 0.0;
};

/// sum_{i=1}^{N} exp(-s (t - i)), evaluated as a geometric series.
double decay_sum(double s, int t, int N);

/// Gain of the channel estimates at downlink symbol t:
///   eta = beta^2 / (N beta + sigma_u2) * sum_{i=1}^{N} exp(-(sBS2 + sUE2)(t - i)).
/// Throws std::invalid_argument unless t > N.
EtaValue eta(int t, int N, double beta_cas, double sigma_u2, double sigma_BS2, double sigma_UE2);
double eta(int t, const LinkParams& link);

/// Limit of eta for N -> infinity with the other parameters fixed:
/// (beta / N) * sum_{i=1}^{N} exp(-(sBS2 + sUE2)(t - i)).
double eta_asymptote(int t, int N, double beta_cas, double sigma_BS2, double sigma_UE2);

/// Increase of eta_asymptote from N-1 to N elements at symbol t. Evaluated as
/// beta / (N (N-1)) * exp(-s (t-N)) * sum_{k=1}^{N-1} (1 - exp(-s k)), a sum of
/// non-negative terms, so the result is >= 0 and exactly 0 when s = 0.
/// Throws std::invalid_argument unless N >= 2 and t > N.
double eta_gap(int N, int t, double beta_cas, double sigma_BS2, double sigma_UE2);

/// Closed-form averaged SNR with random IRS:
///   (P / sigma_d2) ((M-1) N eta + N beta).
double avg_snr_random(int t, const LinkParams& link);

/// Closed-form averaged SNR with optimized IRS:
///   (P / sigma_d2) (((M-1) + N pi/4 - 1) N eta + N beta).
double avg_snr_optimized(int t, const LinkParams& link);

double avg_snr(int t, const LinkParams& link, IrsMode mode);

/// (1/T) sum_t log2(1 + snr_t) over the given downlink SNRs. Throws
/// std::invalid_argument for an empty set.
double ergodic_rate(std::span<const double> avg_snrs, int T);

/// Closed-form SNR for every downlink symbol N+1..T.
std::vector<double> snr_profile(const LinkParams& link, IrsMode mode);
double analytic_rate(const LinkParams& link, IrsMode mode);

/// Precoder normalisation E||H_hat phi||^2 as used for MRT:
/// M N eta (random) or N^2 pi eta / 4 + (M-1) N eta (optimized).
double precoder_power(int M, int N, double eta, IrsMode mode);

// ---------------------------------------------------------------------------
// Exact moments when the estimate is CN(0, eta I) and the error an independent
// CN(0, (beta - eta) I). These are what the independent-estimate Monte Carlo
// converges to and serve as the reference for the gap analysis.

/// E[(sum_n |h_n|)^2] for N i.i.d. CN(0, eta): N eta + N (N-1) pi eta / 4.
double exact_aligned_moment(int N, double eta);

/// E[||H_hat phi||^2].
double exact_precoder_power(int M, int N, double eta, IrsMode mode);

/// E[|(H_eff phi)^T (H_hat phi)^*|^2].
double exact_beamforming_moment(int M, int N, double beta_cas, double eta, IrsMode mode);

/// The closed-form counterpart of exact_beamforming_moment implied by the
/// averaged-SNR expressions: (MN eta)^2 + M N^2 beta eta - M (N eta)^2 for
/// random IRS, c^2 (c^2 + N (beta - eta)) with c^2 = precoder_power for
/// optimized IRS.
double closed_form_beamforming_moment(int M, int N, double beta_cas, double eta, IrsMode mode);

/// Mean SNR with the analytic precoder normalisation and exact moments.
double exact_avg_snr(int t, const LinkParams& link, IrsMode mode);

}  // namespace irspn

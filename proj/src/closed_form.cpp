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

#include "irspn/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irspn {

namespace {

constexpr double pi = std::numbers::pi;

void require_downlink(int t, int N) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (t <= N) throw std::invalid_argument("symbol index must lie after the pilot block (t > N)");
}

}  // namespace

LinkParams link_params(const SystemConfig& config) {
    const auto derived = validate(config);
    if (config.B != config.N)
        throw ConfigError({"B: the MMSE estimator and its gain expression require B == N"});
    return {config.M,          config.N,          config.T,         derived.beta_cas,
            config.sigma_u2,   derived.sigma_BS2, derived.sigma_UE2, derived.P,
            derived.sigma_d2};
}

LinkParams perfect_csi(LinkParams link) {
    link.sigma_u2 = 0.0;
    link.sigma_BS2 = 0.0;
    link.sigma_UE2 = 0.0;
    return link;
}

double decay_sum(double s, int t, int N) {
    if (s == 0.0) return static_cast<double>(N);
    // exp(-s(t-N)) * (1 - exp(-sN)) / (1 - exp(-s))
    return std::exp(-s * static_cast<double>(t - N)) * std::expm1(-s * N) / std::expm1(-s);
}

EtaValue eta(int t, int N, double beta_cas, double sigma_u2, double sigma_BS2, double sigma_UE2) {
    require_downlink(t, N);
    const double n = static_cast<double>(N);
    const double pilot_gain = n * beta_cas / (n * beta_cas + sigma_u2);
    const double mean_decay = decay_sum(sigma_BS2 + sigma_UE2, t, N) / n;
    return {beta_cas * pilot_gain * mean_decay, t, N, beta_cas, sigma_u2, sigma_BS2, sigma_UE2};
}

double eta(int t, const LinkParams& link) {
    return eta(t, link.N, link.beta_cas, link.sigma_u2, link.sigma_BS2, link.sigma_UE2).value;
}

double eta_asymptote(int t, int N, double beta_cas, double sigma_BS2, double sigma_UE2) {
    require_downlink(t, N);
    return beta_cas * (decay_sum(sigma_BS2 + sigma_UE2, t, N) / static_cast<double>(N));
}

double eta_gap(int N, int t, double beta_cas, double sigma_BS2, double sigma_UE2) {
    if (N < 2) throw std::invalid_argument("eta_gap: N must be at least 2");
    require_downlink(t, N);
    const double s = sigma_BS2 + sigma_UE2;
    double spread = 0.0;
    for (int k = 1; k < N; ++k) spread += -std::expm1(-s * k);
    const double n = static_cast<double>(N);
    return beta_cas / (n * (n - 1.0)) * std::exp(-s * static_cast<double>(t - N)) * spread;
}

double avg_snr_random(int t, const LinkParams& link) {
    const double e = eta(t, link);
    const double n = link.N;
    return link.snr_scale() * ((link.M - 1) * n * e + n * link.beta_cas);
}

double avg_snr_optimized(int t, const LinkParams& link) {
    const double e = eta(t, link);
    const double n = link.N;
    return link.snr_scale() * (((link.M - 1) + n * pi / 4.0 - 1.0) * n * e + n * link.beta_cas);
}

double avg_snr(int t, const LinkParams& link, IrsMode mode) {
    return mode == IrsMode::random ? avg_snr_random(t, link) : avg_snr_optimized(t, link);
}

double ergodic_rate(std::span<const double> avg_snrs, int T) {
    if (avg_snrs.empty()) throw std::invalid_argument("ergodic_rate: empty downlink set");
    if (T < 1) throw std::invalid_argument("ergodic_rate: T must be positive");
    double sum = 0.0;
    for (double snr : avg_snrs) sum += std::log2(1.0 + snr);
    return sum / T;
}

std::vector<double> snr_profile(const LinkParams& link, IrsMode mode) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(link.T - link.N));
    for (int t = link.first_downlink(); t <= link.T; ++t) out.push_back(avg_snr(t, link, mode));
    return out;
}

double analytic_rate(const LinkParams& link, IrsMode mode) {
    const auto snrs = snr_profile(link, mode);
    return ergodic_rate(snrs, link.T);
}

double precoder_power(int M, int N, double eta, IrsMode mode) {
    const double n = N;
    if (mode == IrsMode::random) return M * n * eta;
    return n * n * pi * eta / 4.0 + (M - 1) * n * eta;
}

double exact_aligned_moment(int N, double eta) {
    const double n = N;
    return n * eta + n * (n - 1.0) * pi * eta / 4.0;
}

double exact_precoder_power(int M, int N, double eta, IrsMode mode) {
    const double n = N;
    if (mode == IrsMode::random) return M * n * eta;
    return exact_aligned_moment(N, eta) + (M - 1) * n * eta;
}

namespace {

// E[A^4] for A = sum of N i.i.d. Rayleigh magnitudes with E r^2 = eta.
double rayleigh_sum_fourth_moment(int N, double eta) {
    const double n = N;
    const double m1 = std::sqrt(pi * eta) / 2.0;
    const double m2 = eta;
    const double m3 = 0.75 * std::sqrt(pi) * std::pow(eta, 1.5);
    const double m4 = 2.0 * eta * eta;
    return n * m4 + 4.0 * n * (n - 1.0) * m3 * m1 + 3.0 * n * (n - 1.0) * m2 * m2 +
           6.0 * n * (n - 1.0) * (n - 2.0) * m2 * m1 * m1 +
           n * (n - 1.0) * (n - 2.0) * (n - 3.0) * m1 * m1 * m1 * m1;
}

}  // namespace

double exact_beamforming_moment(int M, int N, double beta_cas, double eta, IrsMode mode) {
    // s = H_hat phi, e = Delta phi ~ CN(0, N (beta - eta) I) independent of s:
    // E|(s + e)^T s^*|^2 = E||s||^4 + N (beta - eta) E||s||^2.
    const double n = N;
    const double v = n * eta;
    const double error_power = n * (beta_cas - eta);
    if (mode == IrsMode::random) {
        const double s4 = (M * v) * (M * v) + M * v * v;
        return s4 + error_power * M * v;
    }
    const double a2 = exact_aligned_moment(N, eta);
    const double a4 = rayleigh_sum_fourth_moment(N, eta);
    const double rest = (M - 1) * v;
    const double s2 = a2 + rest;
    const double s4 = a4 + 2.0 * a2 * rest + rest * rest + (M - 1) * v * v;
    return s4 + error_power * s2;
}

double closed_form_beamforming_moment(int M, int N, double beta_cas, double eta, IrsMode mode) {
    const double n = N;
    if (mode == IrsMode::random) {
        const double mn = M * n * eta;
        return mn * mn + M * n * n * beta_cas * eta - M * (n * eta) * (n * eta);
    }
    const double c2 = precoder_power(M, N, eta, mode);
    return c2 * (c2 + n * (beta_cas - eta));
}

double exact_avg_snr(int t, const LinkParams& link, IrsMode mode) {
    const double e = eta(t, link);
    return link.snr_scale() * exact_beamforming_moment(link.M, link.N, link.beta_cas, e, mode) /
           precoder_power(link.M, link.N, e, mode);
}

}  // namespace irspn

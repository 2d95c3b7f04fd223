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

#include "irspn/mmse_estimator.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace irspn {

namespace {

void check_dimensions(const PilotSchedule& sched, const DecayMatrix& dtilde, Index M, Index N) {
    if (M < 1) throw std::invalid_argument("estimator: M must be positive");
    if (sched.elements() != N) throw std::invalid_argument("estimator: schedule has wrong N");
    if (sched.pilots() != N)
        throw std::invalid_argument("estimator: closed-form MMSE requires B == N (square DFT schedule)");
    if (dtilde.entries.size() != sched.pilots())
        throw std::invalid_argument("estimator: decay matrix size differs from pilot count");
}

double shrinkage(double beta_cas, double sigma_u2, Index N) {
    if (!(beta_cas > 0.0)) throw std::invalid_argument("estimator: beta_cas must be positive");
    if (sigma_u2 < 0.0) throw std::invalid_argument("estimator: sigma_u2 must be non-negative");
    return beta_cas / (static_cast<double>(N) * beta_cas + sigma_u2);
}

}  // namespace

CMatrix KroneckerCovariance::expand() const {
    return Eigen::kroneckerProduct(factor, CMatrix::Identity(M, M));
}

DecayMatrix decay_matrix(int t, std::span<const int> pilot_times, const CVector& pilot_symbols,
                         double sigma_BS2, double sigma_UE2) {
    if (static_cast<Index>(pilot_times.size()) != pilot_symbols.size())
        throw std::invalid_argument("decay_matrix: pilot times and symbols differ in length");
    const double rate = (sigma_BS2 + sigma_UE2) / 2.0;
    DecayMatrix d{CVector(pilot_symbols.size()), t};
    for (Index i = 0; i < d.entries.size(); ++i) {
        const auto lag = std::abs(t - pilot_times[static_cast<std::size_t>(i)]);
        d.entries(i) = std::conj(pilot_symbols(i)) * std::exp(-rate * static_cast<double>(lag));
    }
    return d;
}

MmseEstimator::MmseEstimator(const PilotSchedule& sched, const DecayMatrix& dtilde,
                             double beta_cas, double sigma_u2, Index M)
    : M_(M) {
    const Index N = sched.elements();
    check_dimensions(sched, dtilde, M, N);
    weights_ = shrinkage(beta_cas, sigma_u2, N) * (sched.Phi.adjoint() * dtilde.entries.asDiagonal());
}

CMatrix MmseEstimator::apply_matrix(const CVector& psi) const {
    const Index B = weights_.cols();
    if (psi.size() != B * M_) throw std::invalid_argument("estimator: observation has wrong length");
    const Eigen::Map<const CMatrix> Y(psi.data(), M_, B);
    return Y * weights_.transpose();
}

CVector MmseEstimator::apply(const CVector& psi) const {
    const CMatrix H_hat = apply_matrix(psi);
    return Eigen::Map<const CVector>(H_hat.data(), H_hat.size());
}

KroneckerCovariance estimate_covariance(const PilotSchedule& sched, const DecayMatrix& dtilde,
                                        double beta_cas, double sigma_u2, Index M, Index N) {
    check_dimensions(sched, dtilde, M, N);
    const double scale = beta_cas * shrinkage(beta_cas, sigma_u2, N);
    const CMatrix left = sched.Phi.adjoint() * dtilde.entries.asDiagonal();
    CMatrix factor = scale * (left * left.adjoint());
    // Hermitian by construction; remove rounding asymmetry.
    factor = (0.5 * (factor + factor.adjoint())).eval();
    return {std::move(factor), M};
}

KroneckerCovariance error_covariance(const PilotSchedule& sched, const DecayMatrix& dtilde,
                                     double beta_cas, double sigma_u2, Index M, Index N) {
    auto psi = estimate_covariance(sched, dtilde, beta_cas, sigma_u2, M, N);
    psi.factor = beta_cas * CMatrix::Identity(N, N) - psi.factor;
    return psi;
}

ChannelEstimate estimate(const PilotObservation& psi, const PilotSchedule& sched,
                         const DecayMatrix& dtilde, double beta_cas, double sigma_u2, Index M,
                         Index N) {
    const MmseEstimator estimator(sched, dtilde, beta_cas, sigma_u2, M);
    ChannelEstimate out;
    out.h_hat = estimator.apply(psi.psi);
    out.t = dtilde.t;
    out.Psi = estimate_covariance(sched, dtilde, beta_cas, sigma_u2, M, N);
    out.C = error_covariance(sched, dtilde, beta_cas, sigma_u2, M, N);
    return out;
}

}  // namespace irspn

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

#include "irspn/types.hpp"
#include "irspn/uplink_pilots.hpp"

namespace irspn {

/// Diagonal of the pilot decay matrix for target symbol t:
/// entry i = conj(x_i) * exp(-(sigma_BS2 + sigma_UE2)/2 * |t - tau_i|).
struct DecayMatrix {
    CVector entries;
    int t = 0;
};

/// Covariance of the form factor (x) I_M, stored by its N x N left factor.
struct KroneckerCovariance {
    CMatrix factor;
    Index M = 0;

    CMatrix expand() const;
    double trace() const { return static_cast<double>(M) * factor.trace().real(); }
};

/// MMSE estimate of the effective channel (I_N (x) D_t) h at symbol t,
/// together with its covariance Psi_t and error covariance C_t.
struct ChannelEstimate {
    CVector h_hat;
    int t = 0;
    KroneckerCovariance Psi;
    KroneckerCovariance C;
};

DecayMatrix decay_matrix(int t, std::span<const int> pilot_times, const CVector& pilot_symbols,
                         double sigma_BS2, double sigma_UE2);

/// Linear MMSE combiner for one target symbol.
///
/// With unit-modulus pilots and the full N x N DFT schedule the pilot
/// covariance is (N beta + sigma_u2) I, so the estimator reduces to
///   h_hat = beta / (N beta + sigma_u2) * ((Phi^H Dtilde) (x) I_M) psi.
/// The Kronecker product is never formed: reshaping psi into the M x B matrix
/// Y gives H_hat = Y * (scale * Phi^H Dtilde)^T.
class MmseEstimator {
public:
    MmseEstimator(const PilotSchedule& sched, const DecayMatrix& dtilde, double beta_cas,
                  double sigma_u2, Index M);

    /// Estimated M x N effective cascaded matrix.
    CMatrix apply_matrix(const CVector& psi) const;
    CVector apply(const CVector& psi) const;

    Index antennas() const { return M_; }
    Index elements() const { return weights_.rows(); }

private:
    CMatrix weights_;  // N x B: scale * Phi^H Dtilde
    Index M_;
};

/// Throws std::invalid_argument on dimension mismatch or when B != N.
ChannelEstimate estimate(const PilotObservation& psi, const PilotSchedule& sched,
                         const DecayMatrix& dtilde, double beta_cas, double sigma_u2, Index M,
                         Index N);

KroneckerCovariance estimate_covariance(const PilotSchedule& sched, const DecayMatrix& dtilde,
                                        double beta_cas, double sigma_u2, Index M, Index N);

/// beta_cas * I - Psi_t
KroneckerCovariance error_covariance(const PilotSchedule& sched, const DecayMatrix& dtilde,
                                     double beta_cas, double sigma_u2, Index M, Index N);

}  // namespace irspn

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

#include "irspn/rng.hpp"
#include "irspn/types.hpp"

namespace irspn {

/// Unit-modulus reflection coefficients, one per IRS element.
struct IrsPhaseVector {
    CVector phi;
    IrsMode mode = IrsMode::random;
};

/// MRT precoder w = conj(H_hat phi) / norm_const.
struct Precoder {
    CVector w;
    double norm_const = 0.0;
};

/// Which channel the optimized IRS is aligned to.
enum class OptimizeRule {
    estimate_row,    // co-phase one row of the estimated cascaded matrix
    effective_sum,   // co-phase the antenna sum of the true effective channel
};

IrsPhaseVector random_irs(Index N, RandomStream& rng);

/// phi_n = exp(-j arg(H_hat(row, n))), so that sum_n H_hat(row, n) phi_n is
/// the real, non-negative sum of magnitudes. Zero entries get phase 0.
/// Throws std::out_of_range for an invalid row.
IrsPhaseVector optimize_irs(const CMatrix& H_hat, Index reference_row = 0);

/// phi_n = exp(-j arg(sum_m H_eff(m, n))): aligns the all-antenna sum of the
/// effective channel.
IrsPhaseVector optimize_irs_effective_sum(const CMatrix& H_eff);

/// Throws std::invalid_argument for norm_const <= 0.
Precoder mrt_precoder(const CMatrix& H_hat, const IrsPhaseVector& phi, double norm_const);

/// (P / sigma_d2) |(H_eff phi)^T w|^2 where H_eff is the M x N reshape of the
/// effective channel h_eff (phase drift already applied), M = w.size().
double instantaneous_snr(const CVector& h_eff, const IrsPhaseVector& phi, const CVector& w,
                         double P, double sigma_d2);

}  // namespace irspn

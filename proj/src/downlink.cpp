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

#include "irspn/downlink.hpp"

#include <complex>
#include <stdexcept>

namespace irspn {

namespace {

Complex unit_conjugate_phase(Complex z) {
    if (z == Complex{0.0, 0.0}) return {1.0, 0.0};
    return std::polar(1.0, -std::arg(z));
}

}  // namespace

IrsPhaseVector random_irs(Index N, RandomStream& rng) {
    if (N < 1) throw std::invalid_argument("random_irs: N must be positive");
    IrsPhaseVector out{CVector(N), IrsMode::random};
    for (Index n = 0; n < N; ++n) out.phi(n) = std::polar(1.0, rng.uniform_phase());
    return out;
}

IrsPhaseVector optimize_irs(const CMatrix& H_hat, Index reference_row) {
    if (reference_row < 0 || reference_row >= H_hat.rows())
        throw std::out_of_range("optimize_irs: reference row outside the estimate");
    IrsPhaseVector out{CVector(H_hat.cols()), IrsMode::optimized};
    for (Index n = 0; n < H_hat.cols(); ++n) out.phi(n) = unit_conjugate_phase(H_hat(reference_row, n));
    return out;
}

IrsPhaseVector optimize_irs_effective_sum(const CMatrix& H_eff) {
    const CVector column_sums = H_eff.colwise().sum().transpose();
    IrsPhaseVector out{CVector(H_eff.cols()), IrsMode::optimized};
    for (Index n = 0; n < H_eff.cols(); ++n) out.phi(n) = unit_conjugate_phase(column_sums(n));
    return out;
}

Precoder mrt_precoder(const CMatrix& H_hat, const IrsPhaseVector& phi, double norm_const) {
    if (!(norm_const > 0.0)) throw std::invalid_argument("mrt_precoder: norm_const must be positive");
    if (H_hat.cols() != phi.phi.size()) throw std::invalid_argument("mrt_precoder: size mismatch");
    return {(H_hat * phi.phi).conjugate() / norm_const, norm_const};
}

double instantaneous_snr(const CVector& h_eff, const IrsPhaseVector& phi, const CVector& w,
                         double P, double sigma_d2) {
    const Index M = w.size();
    const Index N = phi.phi.size();
    if (h_eff.size() != M * N) throw std::invalid_argument("instantaneous_snr: size mismatch");
    const Eigen::Map<const CMatrix> H(h_eff.data(), M, N);
    const Complex gain = (H * phi.phi).cwiseProduct(w).sum();
    return P / sigma_d2 * std::norm(gain);
}

}  // namespace irspn

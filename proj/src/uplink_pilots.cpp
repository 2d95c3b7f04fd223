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

#include "irspn/uplink_pilots.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "irspn/channel.hpp"

namespace irspn {

PilotSchedule dft_schedule(Index B, Index N, std::vector<int> pilot_times) {
    if (B < 1 || N < 1) throw std::invalid_argument("dft_schedule: B and N must be positive");
    if (B > N) throw std::invalid_argument("dft_schedule: B must not exceed N");
    if (static_cast<Index>(pilot_times.size()) != B)
        throw std::invalid_argument("dft_schedule: need exactly B pilot times");

    CMatrix Phi(B, N);
    for (Index i = 0; i < B; ++i) {
        for (Index n = 0; n < N; ++n) {
            // Reduce i*n mod N first so large N keeps full phase accuracy.
            const auto k = static_cast<double>((i * n) % N);
            Phi(i, n) = std::polar(1.0, -2.0 * std::numbers::pi * k / static_cast<double>(N));
        }
    }
    return {std::move(Phi), CVector::Ones(B), std::move(pilot_times)};
}

CVector uplink_block(const CMatrix& H_cas, const PhaseTrajectories& traj,
                     const PilotSchedule& sched, Index i) {
    const auto drift = drift_matrix(traj, sched.pilot_times[static_cast<std::size_t>(i)]);
    const CVector phi = sched.Phi.row(i).transpose();
    return drift.entries.cwiseProduct(H_cas * phi) * sched.pilot_symbols(i);
}

PilotObservation simulate_uplink(const CVector& h, const PhaseTrajectories& traj,
                                 const PilotSchedule& sched, double sigma_u2, RandomStream& rng) {
    const Index M = traj.antennas();
    const Index N = sched.elements();
    const Index B = sched.pilots();
    if (h.size() != M * N) throw std::invalid_argument("simulate_uplink: channel size mismatch");
    if (sched.pilot_symbols.size() != B || static_cast<Index>(sched.pilot_times.size()) != B)
        throw std::invalid_argument("simulate_uplink: malformed pilot schedule");

    const CMatrix H = reshape(h, M, N);
    PilotObservation obs{CVector(B * M)};
    for (Index i = 0; i < B; ++i) obs.psi.segment(i * M, M) = uplink_block(H, traj, sched, i);
    for (Index k = 0; k < B * M; ++k) obs.psi(k) += rng.cscg(sigma_u2);
    return obs;
}

}  // namespace irspn

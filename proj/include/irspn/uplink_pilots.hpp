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

#include <vector>

#include "irspn/phase_noise.hpp"
#include "irspn/rng.hpp"
#include "irspn/types.hpp"

namespace irspn {

/// IRS phase vectors and pilot symbols for the uplink training block.
/// Row i of `Phi` is the IRS configuration while pilot i is sent at symbol
/// `pilot_times[i]` (1-based).
struct PilotSchedule {
    CMatrix Phi;
    CVector pilot_symbols;
    std::vector<int> pilot_times;

    Index pilots() const { return Phi.rows(); }
    Index elements() const { return Phi.cols(); }
};

/// Stacked BS observations [y_{tau_1}; ...; y_{tau_B}], length B*M.
struct PilotObservation {
    CVector psi;
};

/// Phi(i, n) = exp(-j 2 pi i n / N) for the first B rows of the N-point DFT,
/// all-ones pilot symbols. Throws std::invalid_argument if B > N or the
/// number of pilot times differs from B.
PilotSchedule dft_schedule(Index B, Index N, std::vector<int> pilot_times);

/// Noise-free received pilot block i: D_{tau_i} H_cas phi_i x_i.
CVector uplink_block(const CMatrix& H_cas, const PhaseTrajectories& traj,
                     const PilotSchedule& sched, Index i);

/// Pilot observations with fresh CSCG noise of variance sigma_u2 per antenna
/// and pilot. Noise is drawn after the channel, block by block, antenna by
/// antenna.
PilotObservation simulate_uplink(const CVector& h, const PhaseTrajectories& traj,
                                 const PilotSchedule& sched, double sigma_u2, RandomStream& rng);

}  // namespace irspn

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

/// Sampled Wiener phase drifts over one coherence block.
///
/// Column/entry 0 holds the initial phase theta_0 = 0; symbol t (1-based) is
/// stored at index t, so `bs_phases` is M x (T+1) and `ue_phases` has T+1
/// entries.
struct PhaseTrajectories {
    RMatrix bs_phases;
    RVector ue_phases;

    Index antennas() const { return bs_phases.rows(); }
    Index length() const { return ue_phases.size() - 1; }
    /// theta_{t,m} = theta^BS_{t,m} + theta^UE_t
    double total_phase(Index m, Index t) const { return bs_phases(m, t) + ue_phases(t); }
};

/// diag(e^{j theta_{t,1}}, ..., e^{j theta_{t,M}}), stored as its diagonal.
struct PhaseDriftDiagonal {
    CVector entries;

    CMatrix dense() const { return entries.asDiagonal(); }
};

/// One independent Wiener path per BS antenna plus one for the user, started
/// at zero. Increments are drawn step by step: for each t, the M BS increments
/// in antenna order, then the user increment.
PhaseTrajectories sample_trajectories(Index M, Index T, double sigma_BS2, double sigma_UE2,
                                      RandomStream& rng);

/// Throws std::out_of_range unless 1 <= t <= T.
PhaseDriftDiagonal drift_matrix(const PhaseTrajectories& traj, Index t);

/// E[e^{j theta_{t1,m}} e^{-j theta_{t2,m}}] = exp(-(sigma_BS2 + sigma_UE2) |lag| / 2)
double phase_correlation(double sigma_BS2, double sigma_UE2, long lag);

}  // namespace irspn

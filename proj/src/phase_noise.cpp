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

#include "irspn/phase_noise.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace irspn {

PhaseTrajectories sample_trajectories(Index M, Index T, double sigma_BS2, double sigma_UE2,
                                      RandomStream& rng) {
    if (sigma_BS2 < 0.0 || sigma_UE2 < 0.0)
        throw std::invalid_argument("phase noise variances must be non-negative");
    const double sd_bs = std::sqrt(sigma_BS2);
    const double sd_ue = std::sqrt(sigma_UE2);

    PhaseTrajectories traj{RMatrix::Zero(M, T + 1), RVector::Zero(T + 1)};
    for (Index t = 1; t <= T; ++t) {
        for (Index m = 0; m < M; ++m)
            traj.bs_phases(m, t) = traj.bs_phases(m, t - 1) + sd_bs * rng.normal();
        traj.ue_phases(t) = traj.ue_phases(t - 1) + sd_ue * rng.normal();
    }
    return traj;
}

PhaseDriftDiagonal drift_matrix(const PhaseTrajectories& traj, Index t) {
    if (t < 1 || t > traj.length())
        throw std::out_of_range("symbol index " + std::to_string(t) + " outside 1.." +
                                std::to_string(traj.length()));
    CVector entries(traj.antennas());
    for (Index m = 0; m < traj.antennas(); ++m) entries(m) = std::polar(1.0, traj.total_phase(m, t));
    return {std::move(entries)};
}

double phase_correlation(double sigma_BS2, double sigma_UE2, long lag) {
    return std::exp(-(sigma_BS2 + sigma_UE2) * static_cast<double>(std::labs(lag)) / 2.0);
}

}  // namespace irspn

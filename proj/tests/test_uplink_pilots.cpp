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

#include "doctest.h"

#include <cmath>
#include <numbers>

#include "irspn/channel.hpp"
#include "irspn/uplink_pilots.hpp"
#include "oracles.hpp"

using namespace irspn;

namespace {

std::vector<int> first_times(Index B) {
    std::vector<int> times;
    for (Index i = 1; i <= B; ++i) times.push_back(static_cast<int>(i));
    return times;
}

}  // namespace

TEST_CASE("DFT pilot matrix entries") {
    const auto s2 = dft_schedule(2, 2, {1, 2});
    CHECK(std::abs(s2.Phi(0, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(s2.Phi(0, 1) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(s2.Phi(1, 0) - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(s2.Phi(1, 1) - Complex(-1, 0)) < 1e-15);

    const auto s4 = dft_schedule(4, 4, first_times(4));
    CHECK(std::abs(s4.Phi(1, 1) - Complex(0, -1)) < 1e-15);
    CHECK(std::abs(s4.Phi(1, 3) - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(s4.Phi(3, 3) - Complex(0, -1)) < 1e-15);
    CHECK(s4.pilot_symbols == CVector::Ones(4));
}

TEST_CASE("DFT pilot matrix is orthogonal") {
    for (Index N : {1, 2, 3, 5, 8, 16, 31, 64}) {
        const auto s = dft_schedule(N, N, first_times(N));
        const CMatrix gram = s.Phi * s.Phi.adjoint();
        CHECK((gram - static_cast<double>(N) * CMatrix::Identity(N, N)).cwiseAbs().maxCoeff() <
              1e-12 * static_cast<double>(N));
        for (Index i = 0; i < N; ++i)
            for (Index n = 0; n < N; ++n) CHECK(std::abs(std::abs(s.Phi(i, n)) - 1.0) < 1e-14);
    }
}

TEST_CASE("schedule rejects bad shapes") {
    CHECK_THROWS_AS(dft_schedule(5, 4, first_times(5)), std::invalid_argument);
    CHECK_THROWS_AS(dft_schedule(3, 4, first_times(2)), std::invalid_argument);
}

TEST_CASE("blockwise uplink equals the stacked Kronecker form") {
    // psi = [x_i (phi_i^T kron D_tau_i)]_i h + n, built here directly from dense matrices.
    for (int rep = 0; rep < 12; ++rep) {
        const Index M = 1 + rep % 4;
        const Index N = 1 + (rep / 2) % 4;
        const Index B = 1 + rep % N;
        auto sched = dft_schedule(B, N, first_times(B));
        RandomStream setup(100 + static_cast<std::uint64_t>(rep));
        for (Index i = 0; i < B; ++i) sched.pilot_symbols(i) = std::polar(1.0, setup.uniform_phase());

        const auto ch = sample_cascaded(M, N, 0.7, setup);
        const auto traj = sample_trajectories(M, B + 3, 0.05, 0.02, setup);
        RandomStream noise(500 + static_cast<std::uint64_t>(rep));
        RandomStream noise_copy = noise;
        const double su2 = 0.3;

        const auto obs = simulate_uplink(ch.h, traj, sched, su2, noise);

        CMatrix A(B * M, M * N);
        for (Index i = 0; i < B; ++i) {
            const auto D = drift_matrix(traj, sched.pilot_times[static_cast<std::size_t>(i)]).dense();
            A.block(i * M, 0, M, M * N) =
                sched.pilot_symbols(i) * oracle::kron(sched.Phi.row(i), D);
        }
        CVector expected = A * oracle::vec(ch.H);
        for (Index k = 0; k < B * M; ++k) expected(k) += noise_copy.cscg(su2);
        CHECK((obs.psi - expected).norm() < 1e-12 * (1.0 + expected.norm()));
    }
}

TEST_CASE("uplink noise covariance") {
    const Index M = 2, N = 2;
    const auto sched = dft_schedule(N, N, first_times(N));
    const CVector zero = CVector::Zero(M * N);
    PhaseTrajectories traj{RMatrix::Zero(M, 4), RVector::Zero(4)};
    const double su2 = 2.5;
    RandomStream rng(31);
    const int draws = 100000;
    CMatrix cov = CMatrix::Zero(N * M, N * M);
    for (int d = 0; d < draws; ++d) {
        const auto obs = simulate_uplink(zero, traj, sched, su2, rng);
        cov += obs.psi * obs.psi.adjoint();
    }
    cov /= static_cast<double>(draws);
    for (Index k = 0; k < N * M; ++k) CHECK(cov(k, k).real() == doctest::Approx(su2).epsilon(0.02));
    const CMatrix off = cov - CMatrix(cov.diagonal().asDiagonal());
    CHECK(off.cwiseAbs().maxCoeff() < 0.02 * su2);
}

TEST_CASE("noiseless pilot energy is N M beta per observation block") {
    const Index M = 3, N = 4;
    const double beta = 1.5;
    const auto sched = dft_schedule(N, N, first_times(N));
    RandomStream rng(12);
    const int draws = 20000;
    double energy = 0.0;
    for (int d = 0; d < draws; ++d) {
        const auto ch = sample_cascaded(M, N, beta, rng);
        const auto traj = sample_trajectories(M, N, 0.01, 0.01, rng);
        for (Index i = 0; i < N; ++i) energy += uplink_block(ch.H, traj, sched, i).squaredNorm();
    }
    CHECK(energy / (static_cast<double>(draws) * N) ==
          doctest::Approx(static_cast<double>(N * M) * beta).epsilon(0.02));
}

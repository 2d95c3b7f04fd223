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

#include <cstdint>
#include <random>

#include "irspn/types.hpp"

namespace irspn {

// Tags separating the independent random sources a single trial consumes.
enum class Purpose : std::uint64_t {
    channel = 1,
    phase_noise = 2,
    uplink_noise = 3,
    irs_phase = 4,
    estimate = 5,
    estimate_error = 6,
};

std::uint64_t splitmix64(std::uint64_t x);

/// A seeded source of the variates used by the simulators.
///
/// Holds its own engine and Gaussian cache, so a copy replays exactly the
/// same sequence as the original.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    double normal();
    /// Uniform on [0, 1).
    double uniform();
    /// Uniform on [0, 2*pi).
    double uniform_phase();
    /// Circularly symmetric complex Gaussian with E|z|^2 = variance.
    Complex cscg(double variance);

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Deterministic seed hierarchy.
///
/// `child(tag)` derives a sub-tree, `stream(trial, purpose)` yields the
/// substream for one trial. Substream seeds depend only on the path of tags,
/// never on execution order, so trials may run on any number of threads.
class StreamTree {
public:
    explicit StreamTree(std::uint64_t seed) : seed_(seed) {}

    StreamTree child(std::uint64_t tag) const;
    RandomStream stream(std::uint64_t trial, Purpose purpose) const;
    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
};

}  // namespace irspn

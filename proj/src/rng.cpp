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

#include "irspn/rng.hpp"

#include <cmath>
#include <numbers>

namespace irspn {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed) {}

double RandomStream::normal() { return normal_(engine_); }

double RandomStream::uniform() { return uniform_(engine_); }

double RandomStream::uniform_phase() { return 2.0 * std::numbers::pi * uniform_(engine_); }

Complex RandomStream::cscg(double variance) {
    const double scale = std::sqrt(variance / 2.0);
    const double re = normal();
    const double im = normal();
    return {scale * re, scale * im};
}

StreamTree StreamTree::child(std::uint64_t tag) const {
    return StreamTree(splitmix64(seed_ ^ splitmix64(tag + 0x5851f42d4c957f2dULL)));
}

RandomStream StreamTree::stream(std::uint64_t trial, Purpose purpose) const {
    const std::uint64_t per_trial = splitmix64(seed_ ^ splitmix64(trial));
    return RandomStream(splitmix64(per_trial + static_cast<std::uint64_t>(purpose)));
}

}  // namespace irspn

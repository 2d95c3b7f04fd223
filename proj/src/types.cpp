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

#include "irspn/types.hpp"

#include <stdexcept>
#include <string>

namespace irspn {

std::string_view to_string(IrsMode mode) {
    return mode == IrsMode::random ? "random" : "optimized";
}

std::string_view to_string(Fidelity fidelity) {
    switch (fidelity) {
        case Fidelity::analytic: return "analytic";
        case Fidelity::simplified: return "simplified";
        case Fidelity::full: return "full";
    }
    return "?";
}

IrsMode parse_mode(std::string_view text) {
    if (text == "random") return IrsMode::random;
    if (text == "optimized") return IrsMode::optimized;
    throw std::invalid_argument("unknown IRS mode '" + std::string(text) + "'");
}

Fidelity parse_fidelity(std::string_view text) {
    if (text == "analytic") return Fidelity::analytic;
    if (text == "simplified") return Fidelity::simplified;
    if (text == "full") return Fidelity::full;
    throw std::invalid_argument("unknown fidelity '" + std::string(text) + "'");
}

}  // namespace irspn

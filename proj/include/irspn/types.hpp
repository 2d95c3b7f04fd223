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

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace irspn {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// IRS configuration used during downlink transmission.
enum class IrsMode { random, optimized };

// How a mean SNR is obtained: closed form, Monte Carlo with independent
// Gaussian estimates, or Monte Carlo over the whole pilot-to-precoder chain.
enum class Fidelity { analytic, simplified, full };

std::string_view to_string(IrsMode mode);
std::string_view to_string(Fidelity fidelity);
IrsMode parse_mode(std::string_view text);
Fidelity parse_fidelity(std::string_view text);

}  // namespace irspn

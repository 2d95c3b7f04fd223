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
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace irspn {

/// Physical and experiment parameters of one IRS-assisted link.
///
/// Defaults are the reference scenario: 16 BS antennas and 16 IRS elements at
/// 2.5 GHz with 100 ns symbols, blocks of 500 symbols, 30 dBm transmit power,
/// -80 dBm downlink noise, and a -30 dB / 100 m / exponent-2 path loss.
/// `sigma_u2` defaults to beta_cas/100 (20 dB pilot SNR per element).
struct SystemConfig {
    int M = 16;
    int N = 16;
    int B = 16;
    int T = 500;
    double f_c = 2.5e9;
    double T_s = 1e-7;
    double zeta_BS = 0.0;
    double zeta_UE = 0.0;
    double P_dbm = 30.0;
    double sigma_d2_dbm = -80.0;
    double sigma_u2 = 1e-9;
    double C0_db = -30.0;
    double d_cas = 100.0;
    double D0 = 1.0;
    double alpha = 2.0;
    std::uint64_t seed = 20221;

    bool operator==(const SystemConfig&) const = default;
};

struct DerivedParams {
    double beta_cas = 0.0;
    double sigma_BS2 = 0.0;
    double sigma_UE2 = 0.0;
    double P = 0.0;
    double sigma_d2 = 0.0;
    std::vector<int> pilot_times;
};

/// Raised when a configuration violates one or more constraints. Every
/// violation is collected before throwing; each message starts with the
/// offending field name.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

double dbm_to_watt(double p_dbm);
double watt_to_dbm(double p_watt);

/// C0 * (d/D0)^(-alpha) with C0 given in dB. Throws std::invalid_argument for
/// non-positive distances.
double path_loss_beta(double C0_db, double d, double D0, double alpha);

/// Per-symbol Wiener increment variance 4 pi^2 f_c^2 T_s zeta in rad^2.
double phase_noise_variance(double f_c, double T_s, double zeta);

DerivedParams validate(const SystemConfig& config);

// JSON form: a flat object keyed by the SystemConfig field names. Missing keys
// keep their defaults, unknown keys are rejected.
SystemConfig config_from_json(const nlohmann::json& object);
nlohmann::json config_to_json(const SystemConfig& config);
SystemConfig load_config(const std::filesystem::path& path);

/// Applies one `key=value` override. Throws ConfigError for unknown keys or
/// unparseable values.
void apply_override(SystemConfig& config, std::string_view key, std::string_view value);

const std::vector<std::string>& config_field_names();

}  // namespace irspn

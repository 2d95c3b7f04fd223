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

#include "irspn/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace irspn {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += "; ";
        out += item;
    }
    return out;
}

template <typename Int>
Int read_integer(const nlohmann::json& value, const std::string& key,
                 std::vector<std::string>& errors) {
    if (!value.is_number_integer()) {
        errors.push_back(key + ": expected an integer");
        return Int{};
    }
    if constexpr (std::is_unsigned_v<Int>) {
        if (value.is_number_unsigned()) return value.get<Int>();
        const auto signed_value = value.get<std::int64_t>();
        if (signed_value < 0) {
            errors.push_back(key + ": must be non-negative");
            return Int{};
        }
        return static_cast<Int>(signed_value);
    } else {
        const auto wide = value.get<std::int64_t>();
        if (wide < std::numeric_limits<Int>::min() || wide > std::numeric_limits<Int>::max()) {
            errors.push_back(key + ": out of range");
            return Int{};
        }
        return static_cast<Int>(wide);
    }
}

double read_number(const nlohmann::json& value, const std::string& key,
                   std::vector<std::string>& errors) {
    if (!value.is_number()) {
        errors.push_back(key + ": expected a number");
        return 0.0;
    }
    return value.get<double>();
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error("invalid configuration: " + join(violations)),
      violations_(std::move(violations)) {}

double dbm_to_watt(double p_dbm) { return std::pow(10.0, (p_dbm - 30.0) / 10.0); }

double watt_to_dbm(double p_watt) { return 10.0 * std::log10(p_watt) + 30.0; }

double path_loss_beta(double C0_db, double d, double D0, double alpha) {
    if (!(d > 0.0)) throw std::invalid_argument("path distance must be positive");
    if (!(D0 > 0.0)) throw std::invalid_argument("reference distance must be positive");
    return std::pow(10.0, C0_db / 10.0) * std::pow(d / D0, -alpha);
}

double phase_noise_variance(double f_c, double T_s, double zeta) {
    constexpr double four_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
    return four_pi_sq * f_c * f_c * T_s * zeta;
}

DerivedParams validate(const SystemConfig& c) {
    std::vector<std::string> errors;
    auto require = [&errors](bool ok, std::string message) {
        if (!ok) errors.push_back(std::move(message));
    };

    require(c.M >= 1, "M: BS antenna count must be >= 1");
    require(c.N >= 1, "N: IRS element count must be >= 1");
    require(c.B >= 1, "B: pilot count must be >= 1");
    require(c.B <= c.N, "B: pilot count must not exceed N (rows of the DFT pilot matrix)");
    require(c.T > c.B, "T: coherence block must be longer than the pilot block (empty downlink set)");
    require(std::isfinite(c.f_c) && c.f_c > 0.0, "f_c: carrier frequency must be positive and finite");
    require(std::isfinite(c.T_s) && c.T_s > 0.0, "T_s: symbol interval must be positive and finite");
    require(std::isfinite(c.zeta_BS) && c.zeta_BS >= 0.0, "zeta_BS: oscillator constant must be >= 0");
    require(std::isfinite(c.zeta_UE) && c.zeta_UE >= 0.0, "zeta_UE: oscillator constant must be >= 0");
    require(std::isfinite(c.P_dbm), "P_dbm: transmit power must be finite");
    require(std::isfinite(c.sigma_d2_dbm), "sigma_d2_dbm: downlink noise power must be finite");
    require(std::isfinite(c.sigma_u2) && c.sigma_u2 > 0.0, "sigma_u2: uplink noise variance must be positive");
    require(std::isfinite(c.C0_db), "C0_db: reference path loss must be finite");
    require(std::isfinite(c.d_cas) && c.d_cas > 0.0, "d_cas: path distance must be positive");
    require(std::isfinite(c.D0) && c.D0 > 0.0, "D0: reference distance must be positive");
    require(std::isfinite(c.alpha), "alpha: path loss exponent must be finite");

    DerivedParams d;
    if (errors.empty()) {
        d.beta_cas = path_loss_beta(c.C0_db, c.d_cas, c.D0, c.alpha);
        d.sigma_BS2 = phase_noise_variance(c.f_c, c.T_s, c.zeta_BS);
        d.sigma_UE2 = phase_noise_variance(c.f_c, c.T_s, c.zeta_UE);
        d.P = dbm_to_watt(c.P_dbm);
        d.sigma_d2 = dbm_to_watt(c.sigma_d2_dbm);
        require(std::isfinite(d.beta_cas) && d.beta_cas > 0.0, "C0_db: cascaded gain underflows or overflows");
        require(std::isfinite(d.P) && d.P > 0.0, "P_dbm: transmit power out of range");
        require(std::isfinite(d.sigma_d2) && d.sigma_d2 > 0.0, "sigma_d2_dbm: noise power out of range");
        require(std::isfinite(d.sigma_BS2), "zeta_BS: phase noise variance overflows");
        require(std::isfinite(d.sigma_UE2), "zeta_UE: phase noise variance overflows");
    }
    if (!errors.empty()) throw ConfigError(std::move(errors));

    d.pilot_times.resize(static_cast<std::size_t>(c.B));
    for (int i = 0; i < c.B; ++i) d.pilot_times[static_cast<std::size_t>(i)] = i + 1;
    return d;
}

const std::vector<std::string>& config_field_names() {
    static const std::vector<std::string> names = {
        "M",           "N",        "B",      "T",     "f_c",   "T_s",
        "zeta_BS",     "zeta_UE",  "P_dbm",  "sigma_d2_dbm", "sigma_u2",
        "C0_db",       "d_cas",    "D0",     "alpha", "seed"};
    return names;
}

SystemConfig config_from_json(const nlohmann::json& object) {
    if (!object.is_object()) throw ConfigError({"config: expected a JSON object"});
    SystemConfig c;
    std::vector<std::string> errors;
    for (const auto& [key, value] : object.items()) {
        if (key == "M") c.M = read_integer<int>(value, key, errors);
        else if (key == "N") c.N = read_integer<int>(value, key, errors);
        else if (key == "B") c.B = read_integer<int>(value, key, errors);
        else if (key == "T") c.T = read_integer<int>(value, key, errors);
        else if (key == "f_c") c.f_c = read_number(value, key, errors);
        else if (key == "T_s") c.T_s = read_number(value, key, errors);
        else if (key == "zeta_BS") c.zeta_BS = read_number(value, key, errors);
        else if (key == "zeta_UE") c.zeta_UE = read_number(value, key, errors);
        else if (key == "P_dbm") c.P_dbm = read_number(value, key, errors);
        else if (key == "sigma_d2_dbm") c.sigma_d2_dbm = read_number(value, key, errors);
        else if (key == "sigma_u2") c.sigma_u2 = read_number(value, key, errors);
        else if (key == "C0_db") c.C0_db = read_number(value, key, errors);
        else if (key == "d_cas") c.d_cas = read_number(value, key, errors);
        else if (key == "D0") c.D0 = read_number(value, key, errors);
        else if (key == "alpha") c.alpha = read_number(value, key, errors);
        else if (key == "seed") c.seed = read_integer<std::uint64_t>(value, key, errors);
        else errors.push_back(key + ": unknown configuration key");
    }
    if (!errors.empty()) throw ConfigError(std::move(errors));
    return c;
}

nlohmann::json config_to_json(const SystemConfig& c) {
    return nlohmann::json{{"M", c.M},
                          {"N", c.N},
                          {"B", c.B},
                          {"T", c.T},
                          {"f_c", c.f_c},
                          {"T_s", c.T_s},
                          {"zeta_BS", c.zeta_BS},
                          {"zeta_UE", c.zeta_UE},
                          {"P_dbm", c.P_dbm},
                          {"sigma_d2_dbm", c.sigma_d2_dbm},
                          {"sigma_u2", c.sigma_u2},
                          {"C0_db", c.C0_db},
                          {"d_cas", c.d_cas},
                          {"D0", c.D0},
                          {"alpha", c.alpha},
                          {"seed", c.seed}};
}

SystemConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"config: cannot open " + path.string()});
    nlohmann::json object;
    try {
        in >> object;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError({"config: " + path.string() + " is not valid JSON (" + e.what() + ")"});
    }
    return config_from_json(object);
}

void apply_override(SystemConfig& config, std::string_view key, std::string_view value) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(value);
    } catch (const nlohmann::json::parse_error&) {
        throw ConfigError({std::string(key) + ": cannot parse override value '" + std::string(value) + "'"});
    }
    auto object = config_to_json(config);
    object[std::string(key)] = parsed;
    config = config_from_json(object);
}

}  // namespace irspn

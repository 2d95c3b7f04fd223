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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace irspn {

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

/// Quotes a field when it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);

/// RFC 4180 writer with "\n" line endings.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& out_;
};

/// Splits RFC 4180 text into rows of fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace irspn

// Copyright 2026 The rprime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Text emission and parsing for reports.
//
// CSV files carry a header row. Display columns (3-decimal ratios, rounded
// expectations, 10-digit sums) come first in the published column order;
// trailing columns hold the exact inputs so that parsing a file rebuilds the
// in-memory report bit for bit.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rprime/gap_analysis.hpp"
#include "rprime/run_stats.hpp"
#include "rprime/twin_stats.hpp"

namespace rprime::io {

// num/den rounded half-up to three decimals ("0.750"); "--" when den = 0.
std::string ratio3(std::uint64_t num, std::uint64_t den);

// Thousandths of num/den rounded half-up.
std::uint64_t ratio_thousandths(std::uint64_t num, std::uint64_t den);

// v with `digits` significant digits.
std::string significant(double v, int digits);

// Exponent d if bound == 10^d, otherwise -1.
int decade_of(std::uint64_t bound);

// Parses a non-negative integer written plainly ("1000000") or in
// scientific notation with an integral value ("1e6", "2.5e7").
std::uint64_t parse_count(std::string_view text);

std::string runs_csv(const std::vector<RunReport>& rows);
std::vector<RunReport> parse_runs_csv(std::string_view text);
nlohmann::json to_json(const RunReport& row);
RunReport run_report_from_json(const nlohmann::json& j);

std::string twins_csv(const std::vector<TwinCensus>& rows);
std::vector<TwinCensus> parse_twins_csv(std::string_view text);
nlohmann::json to_json(const TwinCensus& row);
TwinCensus twin_census_from_json(const nlohmann::json& j);

TwinKind parse_twin_kind(std::string_view name);
std::string brun_csv(const std::vector<BrunPartial>& rows);
std::vector<BrunPartial> parse_brun_csv(std::string_view text);
nlohmann::json to_json(const BrunPartial& row);
BrunPartial brun_partial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GapRecord& g);
GapRecord gap_record_from_json(const nlohmann::json& j);
// One compact JSON document per line.
std::string gap_json_lines(const std::vector<GapRecord>& records);
std::vector<GapRecord> parse_gap_json_lines(std::string_view text);

}  // namespace rprime::io

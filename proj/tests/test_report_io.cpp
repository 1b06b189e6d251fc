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

#include "doctest.h"
#include "rprime/errors.hpp"
#include "rprime/ramanujan.hpp"
#include "rprime/report_io.hpp"
#include "rprime/run_stats.hpp"

using namespace rprime;

TEST_CASE("three-decimal ratios round half up exactly") {
  CHECK(io::ratio3(3, 4) == "0.750");
  CHECK(io::ratio3(10, 35) == "0.286");
  CHECK(io::ratio3(1, 2000) == "0.001");
  CHECK(io::ratio3(1, 2001) == "0.000");
  CHECK(io::ratio3(25629, 58980) == "0.435");
  CHECK(io::ratio3(5, 5) == "1.000");
  CHECK(io::ratio3(0, 0) == "--");
  CHECK(io::ratio_thousandths(964, 1224) == 788);
}

TEST_CASE("count parsing") {
  CHECK(io::parse_count("1000") == 1000);
  CHECK(io::parse_count("1e6") == 1'000'000);
  CHECK(io::parse_count("2.5e7") == 25'000'000);
  CHECK(io::parse_count("1E+3") == 1000);
  CHECK(io::parse_count("18446744073709551615") == ~std::uint64_t{0});
  for (const char* bad : {"", "abc", "1.5", "-3", "1e", "2.55e1", "1e30", "18446744073709551616"})
    CHECK_THROWS_AS(io::parse_count(bad), DomainError);
}

TEST_CASE("decade labels") {
  CHECK(io::decade_of(10) == 1);
  CHECK(io::decade_of(1'000'000'000) == 9);
  CHECK(io::decade_of(12345) == -1);
}

TEST_CASE("runs CSV and JSON round trip") {
  const PrimeTable pt = PrimeTable::build(sieve_limit_for_below(100'000));
  const RamanujanTable rt = compute_below(100'000, pt);
  const auto rows = run_table(5, rt, pt);
  const std::string csv = io::runs_csv(rows);
  CHECK(csv.rfind("n,P_n,expected_ram,actual_ram,expected_nonram,actual_nonram,bound,ramanujan_count,prime_count\n", 0) ==
        0);
  CHECK(io::parse_runs_csv(csv) == rows);
  for (const RunReport& r : rows) CHECK(io::run_report_from_json(nlohmann::json::parse(io::to_json(r).dump())) == r);
}

TEST_CASE("twins CSV and JSON round trip") {
  const std::vector<TwinCensus> rows{make_census(10, 2, 0, 0), make_census(100, 8, 6, 0),
                                     make_census(100'000, 1224, 964, 508), make_census(123, 9, 7, 1)};
  const std::string csv = io::twins_csv(rows);
  CHECK(csv.find("\n1,2,0,0,0.000,0.000,--,10\n") != std::string::npos);
  CHECK(io::parse_twins_csv(csv) == rows);
  for (const auto& r : rows) CHECK(io::twin_census_from_json(nlohmann::json::parse(io::to_json(r).dump())) == r);
}

TEST_CASE("brun CSV and JSON round trip") {
  const std::vector<BrunPartial> rows{{1000, TwinKind::all, 1.3 + 1e-12, 35},
                                     {1000, TwinKind::at_least_one_ramanujan, 0.2, 28},
                                     {1000, TwinKind::both_ramanujan, 1.0 / 3, 10}};
  CHECK(io::parse_brun_csv(io::brun_csv(rows)) == rows);
  for (const auto& r : rows) CHECK(io::brun_partial_from_json(io::to_json(r)) == r);
  CHECK(io::parse_twin_kind("one") == TwinKind::at_least_one_ramanujan);
  CHECK_THROWS_AS(io::parse_twin_kind("some"), DomainError);
}

TEST_CASE("gap JSON lines round trip") {
  GapRecord a{11, 11, 1, 6, 6, true, PrimeGap{6, 6}};
  GapRecord b{149, 151, 2, 75, 76, false, PrimeGap{74, 78}};
  GapRecord c{149, 151, 2, 75, 76, false, std::nullopt};
  const std::vector<GapRecord> records{a, b, c};
  const std::string text = io::gap_json_lines(records);
  CHECK(text.find("\"enclosing_gap\":null") != std::string::npos);
  CHECK(io::parse_gap_json_lines(text) == records);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(io::parse_runs_csv("wrong,header\n"), DomainError);
  CHECK_THROWS_AS(io::parse_twins_csv("n,pi2,pi21,pi22,ratio21,ratio22,ratio2221,bound\n1,2\n"), DomainError);
  CHECK_THROWS(io::parse_gap_json_lines("{not json}\n"));
}

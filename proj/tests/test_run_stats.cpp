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

#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rprime/errors.hpp"
#include "rprime/ramanujan.hpp"
#include "rprime/reference_values.hpp"
#include "rprime/run_stats.hpp"

using namespace rprime;

namespace {

struct Fixture {
  std::uint64_t bound = 1'000'000;
  PrimeTable pt = PrimeTable::build(sieve_limit_for_below(bound));
  RamanujanTable rt = compute_below(bound, pt);
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

// Longest block of equal class among primes < bound, recomputed from the
// definition oracle.
std::pair<std::uint64_t, std::uint64_t> brute_runs(std::uint64_t bound) {
  const auto primes = oracle::primes_upto(bound - 1);
  const auto r = oracle::ramanujan_by_definition(primes.size() / 2 + 1, 3 * bound);
  const std::set<std::uint64_t> rs(r.begin(), r.end());
  std::uint64_t best_r = 0, best_n = 0, cur_r = 0, cur_n = 0;
  for (auto p : primes) {
    if (rs.count(p)) {
      ++cur_r;
      cur_n = 0;
    } else {
      ++cur_n;
      cur_r = 0;
    }
    best_r = std::max(best_r, cur_r);
    best_n = std::max(best_n, cur_n);
  }
  return {best_r, best_n};
}

}  // namespace

TEST_CASE("coin-toss formulas at p = 1/2") {
  const double n = 1e6;
  const double offset = std::log2(n) - expected_run_length(1'000'000, 0.5);
  CHECK(round_half_up(offset * 1000) == 667);
  CHECK(round_half_up(run_variance(0.5) * 1000) == 3507);
}

TEST_CASE("round_half_up") {
  CHECK(round_half_up(2.5) == 3);
  CHECK(round_half_up(2.4999) == 2);
  CHECK(round_half_up(0.0) == 0);
  CHECK(round_half_up(16.5) == 17);
}

TEST_CASE("longest runs match a brute-force recount") {
  for (std::uint64_t b : {10, 100, 1000, 10'000, 50'000}) {
    const auto [r, n] = brute_runs(b);
    const LongestRuns got = longest_runs(b, fx().rt, fx().pt);
    CHECK(got.ramanujan == r);
    CHECK(got.non_ramanujan == n);
  }
}

TEST_CASE("table rows to 10^6") {
  const auto rows = run_table(6, fx().rt, fx().pt);
  REQUIRE(rows.size() == 6);
  for (const RunReport& row : rows) {
    const unsigned d = static_cast<unsigned>(std::lround(std::log10(static_cast<double>(row.bound))));
    const auto ref = reference::corrected_run_row(d);
    CHECK(round_half_up(row.p_n * 1000) == static_cast<std::int64_t>(ref.p_thousandths));
    CHECK(row.longest_ram == ref.actual_ram);
    CHECK(row.longest_nonram == ref.actual_nonram);
    CHECK(round_half_up(row.expected_ram) == static_cast<std::int64_t>(ref.expected_ram));
    CHECK(round_half_up(row.expected_nonram) == static_cast<std::int64_t>(ref.expected_nonram));
  }
  CHECK(rows[3].ramanujan_count == 559);
  CHECK(rows[3].prime_count == 1229);
}

TEST_CASE("first run starts") {
  for (std::size_t i = 0; i < 13; ++i) {
    const RunSearch s = first_run_start(i + 1, PrimeClass::ramanujan, fx().rt, fx().pt);
    REQUIRE(s.start);
    CHECK(*s.start == reference::kFirstRamanujanRunStart[i]);
  }
  for (std::size_t i = 0; i < reference::kFirstNonRamanujanRunStart.size(); ++i) {
    const RunSearch s = first_run_start(i + 1, PrimeClass::non_ramanujan, fx().rt, fx().pt);
    REQUIRE(s.start);
    CHECK(*s.start == reference::kFirstNonRamanujanRunStart[i]);
  }
  const RunSearch missing = first_run_start(40, PrimeClass::ramanujan, fx().rt, fx().pt);
  CHECK_FALSE(missing.start);
  CHECK(missing.searched_below == fx().bound);
}

TEST_CASE("domain and coverage") {
  CHECK_THROWS_AS(run_report(9, fx().rt, fx().pt), DomainError);
  CHECK_THROWS_AS(run_report(10'000'000, fx().rt, fx().pt), CoverageError);
  CHECK_THROWS_AS(run_table(0, fx().rt, fx().pt), DomainError);
}

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

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rprime/errors.hpp"
#include "rprime/gap_analysis.hpp"
#include "rprime/ramanujan.hpp"
#include "rprime/reference_values.hpp"

using namespace rprime;

namespace {

struct Fixture {
  std::uint64_t bound = 5'000'000;
  PrimeTable pt = PrimeTable::build(sieve_limit_for_below(bound));
  RamanujanTable rt = compute_below(bound, pt);
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

}  // namespace

TEST_CASE("record for a known run") {
  const std::uint64_t k = fx().pt.prime_count(4919);
  const GapRecord g = gap_for_run(k, 2, fx().rt, fx().pt);
  CHECK(g.run_start == 4919);
  CHECK(g.run_end == 4931);
  CHECK(g.gap_lo == 2460);
  CHECK(g.gap_hi == 2466);
  CHECK(g.sharp);
  REQUIRE(g.enclosing_gap);
  CHECK(g.enclosing_gap->a == 2460);
  CHECK(g.enclosing_gap->b == 2466);
  CHECK_THROWS_AS(gap_for_run(1, 1, fx().rt, fx().pt), DomainError);
  CHECK_THROWS_AS(gap_for_run(fx().pt.prime_count(13), 1, fx().rt, fx().pt), DomainError);
}

TEST_CASE("every forced interval is composite") {
  const auto is = oracle::byte_sieve(fx().bound);
  for (const GapRecord& g : maximal_runs(1'000'000, fx().rt, fx().pt)) {
    for (std::uint64_t x = g.gap_lo; x <= g.gap_hi; ++x) REQUIRE_FALSE(is[x]);
    REQUIRE(g.enclosing_gap);
    CHECK(is[g.enclosing_gap->a - 1]);
    CHECK(is[g.enclosing_gap->b + 1]);
    CHECK(g.sharp == (is[g.gap_lo - 1] && is[g.gap_hi + 1]));
  }
  CHECK(check_half_successor_composite(fx().bound, fx().rt, fx().pt).empty());
  CHECK(check_run_intervals(fx().bound, fx().rt, fx().pt).empty());
  CHECK(check_twin_gaps(fx().bound, fx().rt, fx().pt).empty());
}

TEST_CASE("first sharp runs") {
  for (std::uint64_t r = 1; r <= 9; ++r) {
    const SharpSearch s = first_sharp_run(r, fx().rt, fx().pt, fx().bound);
    REQUIRE(s.record);
    CHECK(s.record->run_start == reference::kFirstSharpRun[r - 1]);
    CHECK(s.record->run_length == r);
  }
  const SharpSearch none = first_sharp_run(10, fx().rt, fx().pt, fx().bound);
  CHECK_FALSE(none.record);
  CHECK(none.searched_below == fx().bound);
}

TEST_CASE("twin Ramanujan pairs sit in gaps of length at least 5") {
  const auto is = oracle::byte_sieve(fx().bound);
  const auto v = fx().rt.values();
  std::uint64_t pairs = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != v[i - 1] + 2 || v[i - 1] <= 3) continue;
    ++pairs;
    const PrimeGap g = twin_gap_check(v[i - 1], v[i], fx().rt, fx().pt);
    CHECK(g.length() >= 5);
    CHECK(g.a <= (v[i - 1] + 1) / 2);
    CHECK(g.b >= (v[i] + 1) / 2);
    for (std::uint64_t x = g.a; x <= g.b; ++x) REQUIRE_FALSE(is[x]);
  }
  CHECK(pairs > 1000);
  CHECK_THROWS_AS(twin_gap_check(137, 139, fx().rt, fx().pt), DomainError);
}

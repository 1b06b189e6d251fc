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

#include <cstdint>
#include <optional>
#include <vector>

#include "rprime/prime_table.hpp"
#include "rprime/ramanujan.hpp"
#include "rprime/twin_stats.hpp"

namespace rprime {

inline constexpr std::uint64_t kDefaultSharpSearchBound = 20'000'000;

// Inclusive run of composite integers a..b.
struct PrimeGap {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  std::uint64_t length() const noexcept { return b - a + 1; }
  friend bool operator==(const PrimeGap&, const PrimeGap&) = default;
};

// A run of r consecutive primes p = p_k .. q = p_{k+r-1}, all odd Ramanujan
// primes, and the composite interval (p+1)/2 .. (q+1)/2 it forces.
struct GapRecord {
  std::uint64_t run_start = 0;
  std::uint64_t run_end = 0;
  std::uint64_t run_length = 0;
  std::uint64_t gap_lo = 0;
  std::uint64_t gap_hi = 0;
  // gap_lo - 1 and gap_hi + 1 are both prime.
  bool sharp = false;
  // The maximal composite interval containing gap_lo..gap_hi.
  std::optional<PrimeGap> enclosing_gap;

  friend bool operator==(const GapRecord&, const GapRecord&) = default;
};

// Record for the r primes starting at p_{start_index}. DomainError unless
// all are odd Ramanujan primes; ConsistencyError if the interval holds a
// prime.
GapRecord gap_for_run(std::uint64_t start_index, std::uint64_t r, const RamanujanTable& ram,
                      const PrimeTable& primes);

struct SharpSearch {
  std::optional<GapRecord> record;
  std::uint64_t searched_below = 0;
};

// Smallest odd Ramanujan prime p starting r consecutive Ramanujan primes
// (the block need not be maximal) whose record is sharp, with the block
// ending below search_bound.
SharpSearch first_sharp_run(std::uint64_t r, const RamanujanTable& ram, const PrimeTable& primes,
                            std::uint64_t search_bound = kDefaultSharpSearchBound);

// The maximal prime gap around (p+1)/2 .. (q+1)/2 for twin Ramanujan primes
// p, q = p + 2 with p > 3. Checks the length-at-least-5 property and the
// 6k +- 1 case split behind it; ConsistencyError if either fails.
PrimeGap twin_gap_check(std::uint64_t p, std::uint64_t q, const RamanujanTable& ram, const PrimeTable& primes);

// Odd Ramanujan primes p < bound for which (p+1)/2 is prime. Expected empty.
std::vector<std::uint64_t> check_half_successor_composite(std::uint64_t bound, const RamanujanTable& ram,
                                                          const PrimeTable& primes);

// Maximal runs of odd Ramanujan primes below bound.
std::vector<GapRecord> maximal_runs(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes);

// Maximal runs below bound whose interval contains a prime. Expected empty.
std::vector<PrimePair> check_run_intervals(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes);

// Twin Ramanujan pairs with q < bound whose enclosing gap is shorter than 5
// or contradicts the case split. Expected empty.
std::vector<PrimePair> check_twin_gaps(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes);

}  // namespace rprime

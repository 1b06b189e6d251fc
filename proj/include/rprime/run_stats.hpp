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

namespace rprime {

// Euler-Mascheroni constant to ten decimals.
inline constexpr double kEulerGamma = 0.5772156649;

enum class PrimeClass { ramanujan, non_ramanujan };

// Longest runs of each class among the primes below `bound`, next to the
// coin-toss expectations for the same number of trials.
struct RunReport {
  std::uint64_t bound = 0;
  std::uint64_t ramanujan_count = 0;  // Ramanujan primes < bound
  std::uint64_t prime_count = 0;      // pi(bound - 1)
  double p_n = 0;                     // ramanujan_count / prime_count
  std::uint64_t longest_ram = 0;
  std::uint64_t longest_nonram = 0;
  double expected_ram = 0;
  double expected_nonram = 0;
  double variance_ram = 0;
  double variance_nonram = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct LongestRuns {
  std::uint64_t ramanujan = 0;
  std::uint64_t non_ramanujan = 0;

  friend bool operator==(const LongestRuns&, const LongestRuns&) = default;
};

// Smallest prime starting a block of the requested length, or nothing if no
// block completes below searched_below.
struct RunSearch {
  std::optional<std::uint64_t> start;
  std::uint64_t searched_below = 0;
};

// (# Ramanujan primes < bound) / pi(bound - 1). Requires bound >= 10.
double ramanujan_fraction(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes);

// Longest blocks of consecutive primes p < bound that are all Ramanujan /
// all non-Ramanujan. A block still open at the bound is cut there.
LongestRuns longest_runs(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes);

// Approximate expected longest run of heads in `trials` tosses of a coin
// with heads probability p:
//   log N / log(1/p) - (1/2 - (log(1 - p) + gamma) / log(1/p)).
double expected_run_length(std::uint64_t trials, double p);

// Approximate variance of that longest run: pi^2 / (6 log(1/p)^2) + 1/12.
// Essentially independent of the number of trials.
double run_variance(double p);

RunSearch first_run_start(std::uint64_t length, PrimeClass kind, const RamanujanTable& ram,
                          const PrimeTable& primes);

// One row of the longest-run table. Expectations use N = pi(bound - 1) and
// the unrounded fraction.
RunReport run_report(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes);

// Rows for bounds 10^1 .. 10^max_decade.
std::vector<RunReport> run_table(unsigned max_decade, const RamanujanTable& ram, const PrimeTable& primes);

// Nearest integer, halves rounded up.
std::int64_t round_half_up(double x);

}  // namespace rprime

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

#include "rprime/run_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rprime/errors.hpp"

namespace rprime {
namespace {

void require_bound(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  if (bound < 10) throw DomainError("run statistics need a bound of at least 10");
  if (bound - 1 > primes.limit())
    throw CoverageError("run statistics below " + std::to_string(bound) + " need primes to " +
                            std::to_string(bound - 1),
                        bound - 1);
  if (ram.complete_below() < bound)
    throw CoverageError("run statistics below " + std::to_string(bound) + " need every Ramanujan prime below it",
                        bound);
}

void require_probability(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("probability must lie strictly between 0 and 1");
}

std::uint64_t ten_to(unsigned e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= 10;
  return v;
}

}  // namespace

double ramanujan_fraction(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  require_bound(bound, ram, primes);
  return static_cast<double>(ram.count_below(bound)) / static_cast<double>(primes.prime_count(bound - 1));
}

LongestRuns longest_runs(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  require_bound(bound, ram, primes);
  LongestRuns best;
  std::uint64_t current = 0;
  bool current_is_ram = false;
  primes.for_each_prime(2, bound - 1, [&](std::uint64_t p) {
    const bool is_ram = ram.contains(p);
    current = (current > 0 && is_ram == current_is_ram) ? current + 1 : 1;
    current_is_ram = is_ram;
    auto& slot = is_ram ? best.ramanujan : best.non_ramanujan;
    slot = std::max(slot, current);
  });
  return best;
}

double expected_run_length(std::uint64_t trials, double p) {
  require_probability(p);
  if (trials == 0) throw DomainError("expected run length needs at least one trial");
  const double log_inv_p = std::log(1.0 / p);
  return std::log(static_cast<double>(trials)) / log_inv_p -
         (0.5 - (std::log(1.0 - p) + kEulerGamma) / log_inv_p);
}

double run_variance(double p) {
  require_probability(p);
  const double log_inv_p = std::log(1.0 / p);
  return std::numbers::pi * std::numbers::pi / (6.0 * log_inv_p * log_inv_p) + 1.0 / 12.0;
}

RunSearch first_run_start(std::uint64_t length, PrimeClass kind, const RamanujanTable& ram,
                          const PrimeTable& primes) {
  if (length == 0) throw DomainError("run length must be at least 1");
  RunSearch result;
  result.searched_below = std::min(ram.complete_below(), primes.limit() + 1);
  const bool want_ram = kind == PrimeClass::ramanujan;
  std::uint64_t run = 0;
  std::uint64_t run_start = 0;
  PrimeCursor c = primes.cursor();
  for (std::uint64_t p = c.next(); p != 0 && p < result.searched_below; p = c.next()) {
    if (ram.contains(p) != want_ram) {
      run = 0;
      continue;
    }
    if (run++ == 0) run_start = p;
    if (run == length) {
      result.start = run_start;
      break;
    }
  }
  return result;
}

RunReport run_report(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  require_bound(bound, ram, primes);
  RunReport r;
  r.bound = bound;
  r.ramanujan_count = ram.count_below(bound);
  r.prime_count = primes.prime_count(bound - 1);
  r.p_n = static_cast<double>(r.ramanujan_count) / static_cast<double>(r.prime_count);
  const LongestRuns runs = longest_runs(bound, ram, primes);
  r.longest_ram = runs.ramanujan;
  r.longest_nonram = runs.non_ramanujan;
  r.expected_ram = expected_run_length(r.prime_count, r.p_n);
  r.expected_nonram = expected_run_length(r.prime_count, 1.0 - r.p_n);
  r.variance_ram = run_variance(r.p_n);
  r.variance_nonram = run_variance(1.0 - r.p_n);
  return r;
}

std::vector<RunReport> run_table(unsigned max_decade, const RamanujanTable& ram, const PrimeTable& primes) {
  if (max_decade < 1 || max_decade > 18) throw DomainError("decade must lie in 1..18");
  std::vector<RunReport> rows;
  for (unsigned d = 1; d <= max_decade; ++d) rows.push_back(run_report(ten_to(d), ram, primes));
  return rows;
}

std::int64_t round_half_up(double x) { return static_cast<std::int64_t>(std::floor(x + 0.5)); }

}  // namespace rprime

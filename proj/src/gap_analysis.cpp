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

#include "rprime/gap_analysis.hpp"

#include <deque>
#include <string>

#include "rprime/errors.hpp"

namespace rprime {
namespace {

bool interval_has_prime(std::uint64_t lo, std::uint64_t hi, const PrimeTable& primes) {
  return primes.prime_count(hi) != primes.prime_count(lo - 1);
}

PrimeGap enclosing(std::uint64_t lo, std::uint64_t hi, const PrimeTable& primes) {
  return PrimeGap{primes.prev_prime(lo) + 1, primes.next_prime(hi) - 1};
}

// Fills a record for a known all-Ramanujan run; no validation.
GapRecord describe(std::uint64_t p, std::uint64_t q, std::uint64_t r, const PrimeTable& primes) {
  GapRecord g;
  g.run_start = p;
  g.run_end = q;
  g.run_length = r;
  g.gap_lo = (p + 1) / 2;
  g.gap_hi = (q + 1) / 2;
  g.sharp = primes.is_prime(g.gap_lo - 1) && primes.is_prime(g.gap_hi + 1);
  g.enclosing_gap = enclosing(g.gap_lo, g.gap_hi, primes);
  return g;
}

void require_complete(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  if (bound > primes.limit()) throw CoverageError("gap scans need primes to the bound", bound);
  if (ram.complete_below() < bound)
    throw CoverageError("gap scans need every Ramanujan prime below the bound", bound);
}

// Empty if the twin case split holds, otherwise a description of the failure.
std::string twin_gap_problem(std::uint64_t p, std::uint64_t q, const PrimeGap& gap, const PrimeTable& primes) {
  if ((p + 1) % 6 != 0) return "twin pair not of the form 6k - 1, 6k + 1";
  if (gap.length() < 5) return "enclosing gap shorter than 5";
  const std::uint64_t k = (p + 1) / 6;
  if (k % 2 == 0) {
    const std::uint64_t six_i = 3 * k;
    if (gap.a > six_i || gap.b < six_i + 4) return "gap does not cover 6i .. 6i + 4";
  } else {
    const std::uint64_t six_i = 3 * (k - 1);
    if (primes.is_prime((q + 3) / 2)) return "(q + 3) / 2 is prime";
    if (gap.a > six_i + 2 || gap.b < six_i + 6) return "gap does not cover 6i + 2 .. 6i + 6";
  }
  return {};
}

}  // namespace

GapRecord gap_for_run(std::uint64_t start_index, std::uint64_t r, const RamanujanTable& ram,
                      const PrimeTable& primes) {
  if (r == 0) throw DomainError("run length must be at least 1");
  if (start_index < 2) throw DomainError("runs must consist of odd primes; p_1 = 2 is excluded");
  const std::uint64_t p = primes.nth_prime(start_index);
  PrimeCursor c = primes.cursor(p);
  std::uint64_t q = 0;
  for (std::uint64_t i = 0; i < r; ++i) {
    q = c.next();
    if (q == 0) throw CoverageError("run extends past the sieve limit", 0);
    if (!ram.contains(q))
      throw DomainError(std::to_string(q) + " (p_" + std::to_string(start_index + i) + ") is not a Ramanujan prime");
  }
  GapRecord g;
  g.run_start = p;
  g.run_end = q;
  g.run_length = r;
  g.gap_lo = (p + 1) / 2;
  g.gap_hi = (q + 1) / 2;
  if (interval_has_prime(g.gap_lo, g.gap_hi, primes))
    throw ConsistencyError("a prime lies in " + std::to_string(g.gap_lo) + ".." + std::to_string(g.gap_hi) +
                           " for the run " + std::to_string(p) + ".." + std::to_string(q));
  g.sharp = primes.is_prime(g.gap_lo - 1) && primes.is_prime(g.gap_hi + 1);
  g.enclosing_gap = enclosing(g.gap_lo, g.gap_hi, primes);
  return g;
}

SharpSearch first_sharp_run(std::uint64_t r, const RamanujanTable& ram, const PrimeTable& primes,
                            std::uint64_t search_bound) {
  if (r == 0) throw DomainError("run length must be at least 1");
  SharpSearch result;
  result.searched_below = std::min({search_bound, ram.complete_below(), primes.limit() + 1});
  std::deque<std::uint64_t> window;
  PrimeCursor c = primes.cursor(3);
  for (std::uint64_t q = c.next(); q != 0 && q < result.searched_below; q = c.next()) {
    if (!ram.contains(q)) {
      window.clear();
      continue;
    }
    window.push_back(q);
    if (window.size() > r) window.pop_front();
    if (window.size() < r) continue;
    const std::uint64_t p = window.front();
    if (primes.is_prime((p + 1) / 2 - 1) && primes.is_prime((q + 1) / 2 + 1)) {
      result.record = describe(p, q, r, primes);
      break;
    }
  }
  return result;
}

PrimeGap twin_gap_check(std::uint64_t p, std::uint64_t q, const RamanujanTable& ram, const PrimeTable& primes) {
  if (q != p + 2 || p <= 3 || !primes.is_prime(p) || !primes.is_prime(q) || !ram.contains(p) || !ram.contains(q))
    throw DomainError(std::to_string(p) + ", " + std::to_string(q) + " are not twin Ramanujan primes above 3");
  const PrimeGap gap = enclosing((p + 1) / 2, (q + 1) / 2, primes);
  if (const std::string problem = twin_gap_problem(p, q, gap, primes); !problem.empty())
    throw ConsistencyError("twin Ramanujan primes " + std::to_string(p) + ", " + std::to_string(q) + ": " + problem);
  return gap;
}

std::vector<std::uint64_t> check_half_successor_composite(std::uint64_t bound, const RamanujanTable& ram,
                                                          const PrimeTable& primes) {
  require_complete(bound, ram, primes);
  std::vector<std::uint64_t> failures;
  for (std::uint64_t p : ram.values()) {
    if (p >= bound) break;
    if (p % 2 == 1 && primes.is_prime((p + 1) / 2)) failures.push_back(p);
  }
  return failures;
}

std::vector<GapRecord> maximal_runs(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  require_complete(bound, ram, primes);
  std::vector<GapRecord> runs;
  std::uint64_t start = 0, last = 0, length = 0;
  auto close = [&] {
    if (length > 0) runs.push_back(describe(start, last, length, primes));
    length = 0;
  };
  primes.for_each_prime(3, bound - 1, [&](std::uint64_t p) {
    if (!ram.contains(p)) {
      close();
      return;
    }
    if (length++ == 0) start = p;
    last = p;
  });
  close();
  return runs;
}

std::vector<PrimePair> check_run_intervals(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  std::vector<PrimePair> failures;
  for (const GapRecord& g : maximal_runs(bound, ram, primes))
    if (interval_has_prime(g.gap_lo, g.gap_hi, primes)) failures.push_back({g.run_start, g.run_end});
  return failures;
}

std::vector<PrimePair> check_twin_gaps(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  require_complete(bound, ram, primes);
  std::vector<PrimePair> failures;
  const auto values = ram.values();
  for (std::size_t i = 1; i < values.size() && values[i] < bound; ++i) {
    const std::uint64_t p = values[i - 1];
    const std::uint64_t q = values[i];
    if (q != p + 2 || p <= 3) continue;
    const PrimeGap gap = enclosing((p + 1) / 2, (q + 1) / 2, primes);
    if (!twin_gap_problem(p, q, gap, primes).empty()) failures.push_back({p, q});
  }
  return failures;
}

}  // namespace rprime

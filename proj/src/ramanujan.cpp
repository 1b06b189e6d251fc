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

#include "rprime/ramanujan.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "rprime/errors.hpp"

namespace rprime {

struct RamanujanTable::RhoMemo {
  std::once_flag once;
  std::vector<std::uint64_t> rho;
};

RamanujanTable::RamanujanTable(std::vector<std::uint64_t> values, std::uint64_t scan_limit,
                               std::uint64_t complete_below)
    : values_(std::move(values)),
      scan_limit_(scan_limit),
      complete_below_(complete_below),
      rho_(std::make_shared<RhoMemo>()) {
  membership_.assign(odd_word_count(std::max<std::uint64_t>(complete_below_, 2)) + 1, 0);
  for (std::uint64_t r : values_) {
    if (r % 2 == 0) continue;
    const std::uint64_t bit = (r - 1) / 2;
    membership_[bit / 64] |= Word{1} << (bit % 64);
  }
}

std::uint64_t RamanujanTable::value(std::uint64_t n) const {
  if (n == 0 || n > values_.size())
    throw DomainError("Ramanujan index " + std::to_string(n) + " outside 1.." + std::to_string(values_.size()));
  return values_[n - 1];
}

void RamanujanTable::require_complete(std::uint64_t x, const char* what) const {
  if (x >= complete_below_)
    throw CoverageError(std::string(what) + " " + std::to_string(x) +
                            " is not below the table's completeness bound " + std::to_string(complete_below_),
                        x + 1);
}

bool RamanujanTable::contains(std::uint64_t p) const {
  require_complete(p, "membership query");
  if (p == 2) return !values_.empty();
  if (p % 2 == 0) return false;
  const std::uint64_t bit = (p - 1) / 2;
  return (membership_[bit / 64] >> (bit % 64)) & 1;
}

std::uint64_t RamanujanTable::count_below(std::uint64_t x) const {
  if (x > complete_below_) require_complete(x - 1, "count bound");
  return static_cast<std::uint64_t>(std::lower_bound(values_.begin(), values_.end(), x) - values_.begin());
}

std::uint64_t RamanujanTable::rho(std::uint64_t n, const PrimeTable& primes) const {
  (void)value(n);
  if (!rho_) throw DomainError("rho on an empty table");
  if (values_.back() > primes.limit())
    throw CoverageError("rho needs primes up to " + std::to_string(values_.back()), values_.back());
  std::call_once(rho_->once, [&] {
    std::vector<std::uint64_t> out(values_.size());
    std::size_t next = 0;
    std::uint64_t index = 0;
    PrimeCursor c = primes.cursor();
    for (std::uint64_t p = c.next(); p != 0 && next < values_.size(); p = c.next()) {
      ++index;
      if (p == values_[next]) out[next++] = index;
    }
    if (next != values_.size()) throw ConsistencyError("a Ramanujan value is not prime");
    rho_->rho = std::move(out);
  });
  return rho_->rho[n - 1];
}

namespace {

std::vector<std::uint64_t> scan_literal(std::uint64_t n, std::uint64_t last_k, const PrimeTable& primes) {
  std::vector<std::uint64_t> slots(n, 0);
  std::uint64_t s = 0;
  for (std::uint64_t k = 1; k <= last_k; ++k) {
    if (primes.is_prime(k)) ++s;
    if (k % 2 == 0 && primes.is_prime(k / 2)) {
      if (s == 0) throw ConsistencyError("interval count went negative at k = " + std::to_string(k));
      --s;
    }
    if (s < n) slots[s] = k;
  }
  return slots;
}

// Between consecutive events s is constant, so slot s ends each stretch at
// the last k before the next event. Writing k - 1 before an event and k
// after it reproduces the per-k assignments exactly.
std::vector<std::uint64_t> scan_events(std::uint64_t n, std::uint64_t last_k, const PrimeTable& primes) {
  std::vector<std::uint64_t> slots(n, 0);
  std::uint64_t s = 0;
  PrimeCursor rising = primes.cursor();
  PrimeCursor halving = primes.cursor();
  std::uint64_t p = rising.next();
  std::uint64_t q = halving.next();
  for (;;) {
    const bool prime_due = p != 0 && p <= last_k;
    const bool double_due = q != 0 && 2 * q <= last_k;
    if (!prime_due && !double_due) break;
    std::uint64_t k;
    bool up;
    if (prime_due && (!double_due || p < 2 * q)) {
      k = p;
      up = true;
      p = rising.next();
    } else {
      k = 2 * q;
      up = false;
      q = halving.next();
    }
    if (s < n) slots[s] = k - 1;
    if (up) {
      ++s;
    } else {
      if (s == 0) throw ConsistencyError("interval count went negative at k = " + std::to_string(k));
      --s;
    }
    if (s < n) slots[s] = k;
  }
  if (s < n) slots[s] = last_k;
  return slots;
}

}  // namespace

RamanujanTable compute_first(std::uint64_t n, const PrimeTable& primes, ScanStrategy strategy) {
  if (n == 0) throw DomainError("compute_first needs n >= 1");
  if (3 * n > primes.prime_total())
    throw CoverageError("computing R_1..R_" + std::to_string(n) + " needs primes up to p_" +
                            std::to_string(3 * n) + " (at most " + std::to_string(nth_prime_upper_bound(3 * n)) +
                            "), the sieve stops at " + std::to_string(primes.limit()),
                        nth_prime_upper_bound(3 * n));
  const std::uint64_t last_k = primes.nth_prime(3 * n) - 1;
  std::vector<std::uint64_t> slots =
      strategy == ScanStrategy::literal ? scan_literal(n, last_k, primes) : scan_events(n, last_k, primes);

  for (std::uint64_t i = 0; i < n; ++i) {
    if (slots[i] == 0) throw ConsistencyError("no interval with " + std::to_string(i) + " primes before p_{3n}");
    slots[i] += 1;
  }
  const std::uint64_t complete = slots.back() + 1;
  return RamanujanTable(std::move(slots), last_k, complete);
}

RamanujanTable compute_below(std::uint64_t x, const PrimeTable& primes, ScanStrategy strategy) {
  if (x < 2) throw DomainError("compute_below needs x >= 2");
  if (x > primes.limit())
    throw CoverageError("compute_below(" + std::to_string(x) + ") needs the sieve to reach x", x);
  const std::uint64_t n = (primes.prime_count(x) + 1) / 2 + 1;
  RamanujanTable first = compute_first(n, primes, strategy);
  if (first.values_.back() <= x) throw ConsistencyError("R_n did not exceed x; sizing bound violated");
  std::vector<std::uint64_t> values = std::move(first.values_);
  values.erase(std::lower_bound(values.begin(), values.end(), x), values.end());
  return RamanujanTable(std::move(values), first.scan_limit_, x);
}

std::uint64_t sieve_limit_for_first(std::uint64_t n) { return nth_prime_upper_bound(3 * n); }

std::uint64_t sieve_limit_for_below(std::uint64_t x) {
  const std::uint64_t n = (prime_count_upper_bound(x) + 1) / 2 + 1;
  return std::max(x + 2, sieve_limit_for_first(n));
}

Theorem2Detail theorem2_detail(const RamanujanTable& table, std::uint64_t n, const PrimeTable& primes) {
  if (n <= 1) throw DomainError("the bounds hold only for n > 1");
  Theorem2Detail d;
  d.rn = table.value(n);
  d.p2n = primes.nth_prime(2 * n);
  d.p4n = primes.nth_prime(4 * n);
  const double two_n = 2.0 * static_cast<double>(n);
  const double four_n = 4.0 * static_cast<double>(n);
  d.lower_log = two_n * std::log(two_n);
  d.upper_log = four_n * std::log(four_n);

  const double p2n = static_cast<double>(d.p2n);
  const double rn = static_cast<double>(d.rn);
  const double p4n = static_cast<double>(d.p4n);
  const double margins[] = {(p2n - d.lower_log) / p2n, (d.upper_log - rn) / d.upper_log,
                            (p4n - d.upper_log) / p4n};
  d.min_relative_margin = std::abs(margins[0]);
  for (double m : margins) d.min_relative_margin = std::min(d.min_relative_margin, std::abs(m));
  if (d.min_relative_margin <= 1e-6)
    throw ConsistencyError("double-precision comparison at n = " + std::to_string(n) + " is too close to call");

  d.holds = d.lower_log < p2n && d.p2n < d.rn && rn < d.upper_log && d.upper_log < p4n;
  return d;
}

BoundsReport verify_theorem2(const RamanujanTable& table, std::uint64_t n, const PrimeTable& primes) {
  const Theorem2Detail d = theorem2_detail(table, n, primes);
  return BoundsReport{n, Rational{d.rn, primes.nth_prime(3 * n)}, d.holds, n};
}

BoundsReport max_ratio(const RamanujanTable& table, std::uint64_t range_end,
                       const std::set<std::uint64_t>& exclusions, const PrimeTable& primes) {
  if (range_end > table.count())
    throw CoverageError("range end " + std::to_string(range_end) + " exceeds the table's " +
                            std::to_string(table.count()) + " values",
                        0);
  if (3 * range_end > primes.prime_total())
    throw CoverageError("max_ratio needs primes up to p_" + std::to_string(3 * range_end),
                        nth_prime_upper_bound(3 * range_end));

  BoundsReport best;
  bool found = false;
  PrimeCursor c = primes.cursor();
  for (std::uint64_t n = 1; n <= range_end; ++n) {
    c.next();
    c.next();
    const std::uint64_t p3n = c.next();
    if (exclusions.contains(n)) continue;
    const Rational ratio{table.value(n), p3n};
    if (found && ratio == best.r_over_p3n)
      throw ConsistencyError("R_n / p_{3n} repeated at n = " + std::to_string(n));
    if (!found || ratio > best.r_over_p3n) {
      best.n = best.argmax_n = n;
      best.r_over_p3n = ratio;
      found = true;
    }
  }
  if (!found) throw DomainError("max_ratio over an empty index range");
  best.theorem2_ok = best.n > 1 && 4 * best.n <= primes.prime_total() &&
                     theorem2_detail(table, best.n, primes).holds;
  return best;
}

Theorem4Result verify_theorem4(const RamanujanTable& table, const PrimeTable& primes) {
  if (table.count() < kLaishramLimit)
    throw CoverageError("the check needs the first " + std::to_string(kLaishramLimit) + " Ramanujan primes, have " +
                            std::to_string(table.count()),
                        0);
  const Rational bound{13, 15};
  Theorem4Result result;
  PrimeCursor c = primes.cursor();
  bool peak_ok = false;
  for (std::uint64_t n = 1; n <= kLaishramLimit; ++n) {
    c.next();
    c.next();
    const std::uint64_t p3n = c.next();
    if (p3n == 0) throw CoverageError("the check needs primes up to p_" + std::to_string(3 * kLaishramLimit), 0);
    const Rational ratio{table.value(n), p3n};
    if (n == 5) {
      peak_ok = ratio == Rational{41, 47} && ratio > bound;
    } else if (!(ratio < bound) && !result.first_violation) {
      result.first_violation = n;
    }
  }
  result.checked = kLaishramLimit;
  const BoundsReport peak = max_ratio(table, kLaishramLimit, {}, primes);
  result.max_ratio = peak.r_over_p3n;
  result.argmax_n = peak.argmax_n;
  result.holds = peak_ok && !result.first_violation && peak.argmax_n == 5;
  return result;
}

std::uint64_t conjecture1_threshold(std::uint64_t m) {
  if (m == 0) throw DomainError("m must be at least 1");
  if (m == 1) return 1;
  if (m == 2) return 1245;
  if (m <= 4) return 189;
  if (m <= 6) return 85;
  if (m <= 19) return 10;
  return 2;
}

Conjecture1Result verify_conjecture1(const RamanujanTable& table, std::uint64_t m, std::uint64_t limit,
                                     const PrimeTable& primes) {
  Conjecture1Result result;
  result.m = m;
  result.threshold = conjecture1_threshold(m);
  if (limit > table.complete_below())
    throw CoverageError("the scan needs every Ramanujan prime below " + std::to_string(limit), limit);
  for (std::uint64_t n = 1; m * n <= table.count() && table.value(m * n) < limit; ++n) {
    ++result.checked;
    if (table.rho(m * n, primes) <= m * table.rho(n, primes)) continue;
    if (n >= result.threshold) {
      result.violations.push_back(n);
    } else if (!result.smallest_below_threshold) {
      result.smallest_below_threshold = n;
    }
  }
  return result;
}

}  // namespace rprime

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

#include <compare>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "rprime/prime_table.hpp"

namespace rprime {

// Positive fraction num/den. Ordering and equality are exact (128-bit
// cross-multiplication), so 41/47 and 82/94 compare equal.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const auto lhs = static_cast<unsigned __int128>(a.num) * b.den;
    const auto rhs = static_cast<unsigned __int128>(b.num) * a.den;
    return lhs <=> rhs;
  }
  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return (a <=> b) == std::strong_ordering::equal;
  }

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// floor((10/3)^10) = 169350. Above this index R_n < (13/5) n log n, which
// with p_{3n} > 3n log n gives R_n / p_{3n} < 13/15 without computation; at
// or below it the bound has to be checked against computed values.
inline constexpr std::uint64_t kLaishramLimit = 169350;

// How the interval scan walks k = 1 .. p_{3n} - 1.
enum class ScanStrategy {
  // Visits every k and queries the sieve for k and k/2. Reference path.
  literal,
  // Visits only the k where the interval count changes (k prime, or k = 2q
  // with q prime) and fills the stretches between them. Same output.
  event_driven,
};

// R_1 .. R_count in increasing order, with a membership bitset over odd
// values laid out like PrimeTable::odd_words().
//
// complete_below() is the bound under which the table is known to hold
// every Ramanujan prime: R_count + 1 after compute_first, x after
// compute_below(x). Membership queries above it are coverage errors.
class RamanujanTable {
 public:
  RamanujanTable() = default;

  std::span<const std::uint64_t> values() const noexcept { return values_; }
  std::uint64_t count() const noexcept { return values_.size(); }
  // R_n, 1-based.
  std::uint64_t value(std::uint64_t n) const;

  std::uint64_t scan_limit() const noexcept { return scan_limit_; }
  std::uint64_t complete_below() const noexcept { return complete_below_; }

  bool contains(std::uint64_t p) const;
  // Number of Ramanujan primes < x.
  std::uint64_t count_below(std::uint64_t x) const;

  // pi(R_n). The full rho sequence is filled on first use by one pass over
  // the primes and shared by copies of the table.
  std::uint64_t rho(std::uint64_t n, const PrimeTable& primes) const;

  // Bit i set iff 2i + 1 is a Ramanujan prime; covers [0, complete_below)
  // plus one zero padding word. R_1 = 2 is not represented.
  std::span<const Word> odd_membership() const noexcept { return membership_; }

  void save(const std::filesystem::path& path) const;
  static RamanujanTable load(const std::filesystem::path& path);

  friend bool operator==(const RamanujanTable& a, const RamanujanTable& b) noexcept {
    return a.values_ == b.values_ && a.scan_limit_ == b.scan_limit_ &&
           a.complete_below_ == b.complete_below_;
  }

 private:
  friend RamanujanTable compute_first(std::uint64_t, const PrimeTable&, ScanStrategy);
  friend RamanujanTable compute_below(std::uint64_t, const PrimeTable&, ScanStrategy);

  RamanujanTable(std::vector<std::uint64_t> values, std::uint64_t scan_limit, std::uint64_t complete_below);
  void require_complete(std::uint64_t x, const char* what) const;

  struct RhoMemo;

  std::vector<std::uint64_t> values_;
  std::vector<Word> membership_;
  std::uint64_t scan_limit_ = 0;
  std::uint64_t complete_below_ = 0;
  std::shared_ptr<RhoMemo> rho_;
};

// R_1 .. R_n. The primes must reach p_{3n}.
RamanujanTable compute_first(std::uint64_t n, const PrimeTable& primes,
                             ScanStrategy strategy = ScanStrategy::event_driven);

// Every Ramanujan prime < x, via compute_first(ceil(pi(x)/2) + 1).
RamanujanTable compute_below(std::uint64_t x, const PrimeTable& primes,
                             ScanStrategy strategy = ScanStrategy::event_driven);

// A sieve limit sufficient for compute_first(n) / compute_below(x).
std::uint64_t sieve_limit_for_first(std::uint64_t n);
std::uint64_t sieve_limit_for_below(std::uint64_t x);

struct BoundsReport {
  std::uint64_t n = 0;
  Rational r_over_p3n;
  bool theorem2_ok = false;
  // For max_ratio, the maximizing index (equal to n). For single-index
  // reports, n itself.
  std::uint64_t argmax_n = 0;
};

// The four comparisons 2n log 2n < p_2n < R_n < 4n log 4n < p_4n.
struct Theorem2Detail {
  double lower_log = 0;  // 2n log 2n
  std::uint64_t p2n = 0;
  std::uint64_t rn = 0;
  double upper_log = 0;  // 4n log 4n
  std::uint64_t p4n = 0;
  bool holds = false;
  // Smallest |relative gap| among the three integer-vs-real comparisons.
  double min_relative_margin = 0;
};

// Requires n > 1 and primes reaching p_{4n}. Throws ConsistencyError when a
// real-valued comparison is within 1e-6 relative of a tie.
Theorem2Detail theorem2_detail(const RamanujanTable& table, std::uint64_t n, const PrimeTable& primes);
BoundsReport verify_theorem2(const RamanujanTable& table, std::uint64_t n, const PrimeTable& primes);

// Unique argmax of R_n / p_{3n} over 1 <= n <= range_end, n not excluded.
BoundsReport max_ratio(const RamanujanTable& table, std::uint64_t range_end,
                       const std::set<std::uint64_t>& exclusions, const PrimeTable& primes);

struct Theorem4Result {
  bool holds = false;
  Rational max_ratio;
  std::uint64_t argmax_n = 0;
  std::uint64_t checked = 0;
  // First n != 5 with R_n / p_{3n} >= 13/15, if any.
  std::optional<std::uint64_t> first_violation;
};

// R_n / p_{3n} < 13/15 for every n <= kLaishramLimit except n = 5, and
// R_5 / p_15 = 41/47.
Theorem4Result verify_theorem4(const RamanujanTable& table, const PrimeTable& primes);

// N(m) for the rho(mn) <= m rho(n) scan.
std::uint64_t conjecture1_threshold(std::uint64_t m);

struct Conjecture1Result {
  std::uint64_t m = 0;
  std::uint64_t threshold = 0;
  std::uint64_t checked = 0;
  // Indices n >= threshold with rho(mn) > m rho(n).
  std::vector<std::uint64_t> violations;
  // Informational: smallest n < threshold with rho(mn) > m rho(n).
  std::optional<std::uint64_t> smallest_below_threshold;
};

// Scans every n with R_{mn} < limit.
Conjecture1Result verify_conjecture1(const RamanujanTable& table, std::uint64_t m, std::uint64_t limit,
                                     const PrimeTable& primes);

}  // namespace rprime

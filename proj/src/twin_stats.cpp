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

#include "rprime/twin_stats.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "rprime/errors.hpp"
#include "rprime/kernels.hpp"

namespace rprime {
namespace {

constexpr std::uint64_t kConjecture4Start = 100000;
constexpr std::size_t kChunkWords = 2048;

void require_twin_coverage(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  if (bound + 2 > primes.limit())
    throw CoverageError("twin pairs up to " + std::to_string(bound) + " need primes to " + std::to_string(bound + 2),
                        bound + 2);
  if (ram.complete_below() <= bound + 2)
    throw CoverageError("twin pairs up to " + std::to_string(bound) + " need every Ramanujan prime up to " +
                            std::to_string(bound + 2),
                        bound + 3);
}

Word low_mask(unsigned bit_inclusive) {
  return bit_inclusive >= 63 ? ~Word{0} : (Word{1} << (bit_inclusive + 1)) - 1;
}

struct TwinCounts {
  std::uint64_t pi2 = 0;
  std::uint64_t pi21 = 0;
  std::uint64_t pi22 = 0;
  std::uint64_t smaller = 0;
  std::uint64_t larger = 0;
};

// In the odd-only layout a twin pair (p, p + 2) is bits i and i + 1 both
// set, so the lesser members are P & (P >> 1). The same shift applied to
// the Ramanujan bitset lines each pair's upper member up with its lower.
TwinCounts count_twins(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  TwinCounts counts;
  if (bound < 3) return counts;
  const std::uint64_t last_bit = (bound - 1) / 2;
  const std::size_t words = last_bit / 64 + 1;
  const auto prime_words = primes.odd_words();
  const auto ram_words = ram.odd_membership();

  std::array<Word, kChunkWords> shifted{}, twins{}, ram_shifted{}, scratch{};
  for (std::size_t w0 = 0; w0 < words; w0 += kChunkWords) {
    const std::size_t n = std::min(kChunkWords, words - w0);
    std::span<Word> sh{shifted.data(), n}, tw{twins.data(), n}, rs{ram_shifted.data(), n}, tmp{scratch.data(), n};
    const auto p_here = prime_words.subspan(w0, n);
    const auto r_here = ram_words.subspan(w0, n);

    kernels::shift_down_one(prime_words.subspan(w0, n + 1), sh);
    kernels::and_words(p_here, sh, tw);
    if (w0 + n == words) tw[n - 1] &= low_mask(static_cast<unsigned>(last_bit % 64));
    kernels::shift_down_one(ram_words.subspan(w0, n + 1), rs);

    counts.pi2 += kernels::popcount(tw);
    counts.smaller += kernels::popcount_and(tw, r_here);
    counts.larger += kernels::popcount_and(tw, rs);
    kernels::or_words(r_here, rs, tmp);
    counts.pi21 += kernels::popcount_and(tw, tmp);
    kernels::and_words(r_here, rs, tmp);
    counts.pi22 += kernels::popcount_and(tw, tmp);
  }
  return counts;
}

// Visits lesser twin members p <= bound in increasing order.
template <class F>
void for_each_twin(std::uint64_t bound, const PrimeTable& primes, F&& f) {
  if (bound < 3) return;
  const std::uint64_t last_bit = (bound - 1) / 2;
  const auto words = primes.odd_words();
  for (std::size_t w = 0; w <= last_bit / 64; ++w) {
    Word t = words[w] & ((words[w] >> 1) | (words[w + 1] << 63));
    if (w == last_bit / 64) t &= low_mask(static_cast<unsigned>(last_bit % 64));
    while (t != 0) {
      const auto bit = static_cast<std::uint64_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(t)));
      t &= t - 1;
      f(2 * bit + 1);
    }
  }
}

bool qualifies(TwinKind kind, std::uint64_t p, const RamanujanTable& ram) {
  switch (kind) {
    case TwinKind::all: return true;
    case TwinKind::at_least_one_ramanujan: return ram.contains(p) || ram.contains(p + 2);
    case TwinKind::both_ramanujan: return ram.contains(p) && ram.contains(p + 2);
  }
  return false;
}

// Running pi(x) - pi(floor(x/2)) at each prime x, in increasing order.
class IntervalCounter {
 public:
  explicit IntervalCounter(const PrimeTable& primes) : upper_(primes.cursor()), lower_(primes.cursor()) {
    next_half_ = lower_.next();
  }

  // Advances to the next prime; returns it (0 when exhausted).
  std::uint64_t advance() {
    const std::uint64_t p = upper_.next();
    if (p == 0) return 0;
    ++index_;
    while (next_half_ != 0 && next_half_ <= p / 2) {
      ++half_count_;
      next_half_ = lower_.next();
    }
    return p;
  }

  std::uint64_t value() const { return index_ - half_count_; }

 private:
  PrimeCursor upper_;
  PrimeCursor lower_;
  std::uint64_t next_half_ = 0;
  std::uint64_t index_ = 0;
  std::uint64_t half_count_ = 0;
};

}  // namespace

TwinCensus make_census(std::uint64_t bound, std::uint64_t pi2, std::uint64_t pi21, std::uint64_t pi22) {
  TwinCensus c;
  c.bound = bound;
  c.pi2 = pi2;
  c.pi21 = pi21;
  c.pi22 = pi22;
  if (pi2 > 0) {
    c.ratio21 = static_cast<double>(pi21) / static_cast<double>(pi2);
    c.ratio22 = static_cast<double>(pi22) / static_cast<double>(pi2);
  }
  if (pi21 > 0) c.ratio2221 = static_cast<double>(pi22) / static_cast<double>(pi21);
  return c;
}

TwinCensus twin_census(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  if (bound < 3) throw DomainError("twin census needs a bound of at least 3");
  require_twin_coverage(bound, ram, primes);
  const TwinCounts counts = count_twins(bound, ram, primes);
  return make_census(bound, counts.pi2, counts.pi21, counts.pi22);
}

bool check_eq3(std::uint64_t p, std::uint64_t q, const PrimeTable& primes) {
  if (p >= q) throw DomainError("check_eq3 needs p < q");
  if (!primes.is_prime(p) || !primes.is_prime(q))
    throw DomainError("check_eq3 needs prime arguments, got " + std::to_string(p) + ", " + std::to_string(q));
  return primes.prime_count(p) - primes.prime_count(p / 2) + 1 == primes.prime_count(q) - primes.prime_count(q / 2);
}

std::vector<PrimePair> check_proposition1(std::uint64_t bound, const PrimeTable& primes) {
  if (bound + 2 > primes.limit()) throw CoverageError("twin scan needs primes to bound + 2", bound + 2);
  std::vector<PrimePair> failures;
  for_each_twin(bound, primes, [&](std::uint64_t p) {
    if (p > 5 && !check_eq3(p, p + 2, primes)) failures.push_back({p, p + 2});
  });
  return failures;
}

std::vector<PrimePair> check_proposition2(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  if (bound > primes.limit()) throw CoverageError("scan needs primes to the bound", bound);
  if (ram.complete_below() <= bound) throw CoverageError("scan needs every Ramanujan prime up to the bound", bound + 1);
  std::vector<PrimePair> failures;
  IntervalCounter counter(primes);
  std::uint64_t p = counter.advance();
  std::uint64_t s_p = counter.value();
  for (std::uint64_t q = counter.advance(); q != 0 && q <= bound; q = counter.advance()) {
    const std::uint64_t s_q = counter.value();
    if (s_p + 1 == s_q && ram.contains(q) && !ram.contains(p)) failures.push_back({p, q});
    p = q;
    s_p = s_q;
  }
  return failures;
}

std::vector<PrimePair> check_proposition2_twins(std::uint64_t bound, const RamanujanTable& ram,
                                                const PrimeTable& primes) {
  if (bound < 2) return {};
  require_twin_coverage(bound - 2, ram, primes);
  std::vector<PrimePair> failures;
  for_each_twin(bound - 2, primes, [&](std::uint64_t p) {
    if (ram.contains(p + 2) && !ram.contains(p)) failures.push_back({p, p + 2});
  });
  return failures;
}

Corollary1Check check_corollary1(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  require_twin_coverage(bound, ram, primes);
  const TwinCounts counts = count_twins(bound, ram, primes);
  Corollary1Check c;
  c.smaller_ramanujan = counts.smaller;
  c.larger_ramanujan = counts.larger;
  c.pi21 = counts.pi21;
  c.pi22 = counts.pi22;
  c.holds = counts.smaller == counts.pi21 && counts.larger == counts.pi22;
  return c;
}

bool check_conjecture4(std::uint64_t bound, const TwinCensus& census) {
  if (bound < kConjecture4Start) throw DomainError("the twin-ratio inequalities are only claimed for x >= 10^5");
  return 5 * census.pi21 < 4 * census.pi2 && 5 * census.pi22 > 2 * census.pi2 && 2 * census.pi22 > census.pi21;
}

Conjecture4Scan check_conjecture4_strict(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes) {
  if (bound < kConjecture4Start) throw DomainError("the twin-ratio inequalities are only claimed for x >= 10^5");
  require_twin_coverage(bound, ram, primes);
  Conjecture4Scan scan;
  std::uint64_t pi2 = 0, pi21 = 0, pi22 = 0;
  auto check_at = [&](std::uint64_t x) {
    ++scan.events;
    const bool ok = 5 * pi21 < 4 * pi2 && 5 * pi22 > 2 * pi2 && 2 * pi22 > pi21;
    if (!ok && !scan.first_failure) scan.first_failure = x;
  };
  bool started = false;
  for_each_twin(bound, primes, [&](std::uint64_t p) {
    if (!started && p > kConjecture4Start) {
      check_at(kConjecture4Start);
      started = true;
    }
    const bool lo = ram.contains(p);
    const bool hi = ram.contains(p + 2);
    ++pi2;
    pi21 += (lo || hi) ? 1 : 0;
    pi22 += (lo && hi) ? 1 : 0;
    if (p >= kConjecture4Start) {
      started = true;
      check_at(p);
    }
  });
  if (!started) check_at(kConjecture4Start);
  scan.holds = !scan.first_failure;
  return scan;
}

std::string_view twin_kind_name(TwinKind kind) noexcept {
  switch (kind) {
    case TwinKind::all: return "all";
    case TwinKind::at_least_one_ramanujan: return "one";
    case TwinKind::both_ramanujan: return "both";
  }
  return "unknown";
}

BrunPartial brun_partial(std::uint64_t bound, TwinKind kind, const RamanujanTable& ram, const PrimeTable& primes) {
  require_twin_coverage(bound, ram, primes);
  BrunPartial b;
  b.bound = bound;
  b.kind = kind;
  // Neumaier's variant of Kahan summation.
  double sum = 0.0, compensation = 0.0;
  auto add = [&](double x) {
    const double t = sum + x;
    compensation += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  };
  for_each_twin(bound, primes, [&](std::uint64_t p) {
    if (!qualifies(kind, p, ram)) return;
    add(1.0 / static_cast<double>(p));
    add(1.0 / static_cast<double>(p + 2));
    ++b.terms;
  });
  b.sum = sum + compensation;
  return b;
}

std::vector<std::uint64_t> twin_lesser_members(std::uint64_t bound, TwinKind kind, std::size_t limit,
                                               const RamanujanTable& ram, const PrimeTable& primes) {
  require_twin_coverage(bound, ram, primes);
  std::vector<std::uint64_t> out;
  for_each_twin(bound, primes, [&](std::uint64_t p) {
    if (out.size() < limit && qualifies(kind, p, ram)) out.push_back(p);
  });
  return out;
}

}  // namespace rprime

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

#include "rprime/prime_table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "rprime/errors.hpp"

namespace rprime {
namespace {

constexpr std::array<std::uint64_t, 5> kPresievePrimes{3, 5, 7, 11, 13};
// Product of kPresievePrimes. A pattern of this many words repeats exactly
// because 64 * kPatternWords is a multiple of every presieve prime.
constexpr std::size_t kPatternWords = 15015;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<Word> presieve_pattern() {
  std::vector<Word> pattern(kPatternWords, ~Word{0});
  for (std::uint64_t p : kPresievePrimes) {
    // Odd multiples of p sit at bits (p - 1) / 2 + j p.
    for (std::uint64_t bit = (p - 1) / 2; bit < kPatternWords * 64; bit += p)
      pattern[bit / 64] &= ~(Word{1} << (bit % 64));
  }
  return pattern;
}

// Odd primes up to n by a plain byte sieve.
std::vector<std::uint64_t> base_primes(std::uint64_t n) {
  std::vector<std::uint8_t> composite(n + 1, 0);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 3; i <= n; i += 2) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += 2 * i) composite[j] = 1;
  }
  return primes;
}

Word low_mask(unsigned bits_inclusive) {
  // Bits 0..bits_inclusive set.
  return bits_inclusive >= 63 ? ~Word{0} : (Word{1} << (bits_inclusive + 1)) - 1;
}

}  // namespace

PrimeCursor::PrimeCursor(std::span<const Word> words, std::uint64_t from) : words_(words) {
  emit_two_ = from <= 2;
  if (words_.empty()) {
    word_ = 0;
    current_ = 0;
    return;
  }
  const std::uint64_t first_odd = from <= 3 ? 3 : (from | 1);
  const std::uint64_t bit = (first_odd - 1) / 2;
  word_ = bit / 64;
  if (word_ >= words_.size()) {
    word_ = words_.size();
    current_ = 0;
    return;
  }
  current_ = words_[word_] & ~((Word{1} << (bit % 64)) - 1);
}

PrimeTable::PrimeTable(std::uint64_t limit, std::uint64_t stride, std::vector<Word> words)
    : limit_(limit), stride_(stride), words_(std::move(words)) {
  index_checkpoints();
}

PrimeTable PrimeTable::build(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 2) throw DomainError("prime table limit must be at least 2");
  if (options.checkpoint_stride == 0 || options.checkpoint_stride % 128 != 0)
    throw DomainError("checkpoint stride must be a positive multiple of 128");

  const std::uint64_t live = odd_word_count(limit);
  const std::uint64_t checkpoints = limit / options.checkpoint_stride + 2;
  const std::uint64_t bytes = (live + 1) * sizeof(Word) + checkpoints * sizeof(std::uint64_t);
  if (bytes > options.memory_ceiling)
    throw ResourceError("prime table to " + std::to_string(limit) + " needs " + std::to_string(bytes) +
                        " bytes, above the ceiling of " + std::to_string(options.memory_ceiling));

  std::vector<Word> words(live + 1, 0);
  const std::uint64_t bit_count = (limit + 1) / 2;
  const std::uint64_t segment_bits = std::max<std::uint64_t>(64, (options.segment_bits + 63) / 64 * 64);

  const std::vector<Word> pattern = presieve_pattern();
  std::vector<std::uint64_t> sieving;
  for (std::uint64_t p : base_primes(isqrt(limit)))
    if (p > kPresievePrimes.back()) sieving.push_back(p);
  // Bit index of the next odd multiple of each sieving prime still to clear.
  std::vector<std::uint64_t> next_bit(sieving.size());
  for (std::size_t j = 0; j < sieving.size(); ++j) next_bit[j] = (sieving[j] * sieving[j] - 1) / 2;

  for (std::uint64_t seg_lo = 0; seg_lo < bit_count; seg_lo += segment_bits) {
    const std::uint64_t seg_hi = std::min(seg_lo + segment_bits, live * 64);
    for (std::uint64_t w = seg_lo / 64; w < seg_hi / 64; ++w) words[w] = pattern[w % kPatternWords];
    for (std::size_t j = 0; j < sieving.size(); ++j) {
      const std::uint64_t p = sieving[j];
      std::uint64_t bit = next_bit[j];
      for (; bit < seg_hi; bit += p) words[bit / 64] &= ~(Word{1} << (bit % 64));
      next_bit[j] = bit;
    }
  }

  // The pattern also cleared 1 and the presieve primes themselves.
  words[0] &= ~Word{1};
  for (std::uint64_t p : kPresievePrimes)
    if (p <= limit) words[(p - 1) / 2 / 64] |= Word{1} << ((p - 1) / 2 % 64);
  const std::uint64_t last_bit = bit_count - 1;
  words[live - 1] &= low_mask(static_cast<unsigned>(last_bit % 64));
  words[live] = 0;

  return PrimeTable(limit, options.checkpoint_stride, std::move(words));
}

void PrimeTable::index_checkpoints() {
  const std::size_t per_block = stride_ / 128;
  const std::size_t live = live_words();
  const std::size_t blocks = (live + per_block - 1) / per_block;
  checkpoints_.assign(blocks + 1, 0);
  std::span<const Word> all{words_};
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = b * per_block;
    const std::size_t hi = std::min(lo + per_block, live);
    checkpoints_[b + 1] = checkpoints_[b] + kernels::popcount(all.subspan(lo, hi - lo));
  }
  total_ = checkpoints_.back() + (limit_ >= 2 ? 1 : 0);
}

void PrimeTable::require_covered(std::uint64_t x, const char* what) const {
  if (x > limit_)
    throw CoverageError(std::string(what) + " " + std::to_string(x) + " is beyond the sieve limit " +
                            std::to_string(limit_),
                        x);
}

bool PrimeTable::is_prime(std::uint64_t k) const {
  require_covered(k, "is_prime argument");
  if (k == 2) return true;
  if (k < 2 || k % 2 == 0) return false;
  const std::uint64_t bit = (k - 1) / 2;
  return (words_[bit / 64] >> (bit % 64)) & 1;
}

std::uint64_t PrimeTable::prime_count(std::uint64_t x) const {
  require_covered(x, "prime_count argument");
  if (x < 2) return 0;
  const std::uint64_t bit = (x - 1) / 2;  // last odd bit included
  const std::size_t word = bit / 64;
  const std::size_t per_block = stride_ / 128;
  const std::size_t block = word / per_block;
  std::span<const Word> all{words_};
  std::uint64_t count = 1 + checkpoints_[block];
  count += kernels::popcount(all.subspan(block * per_block, word - block * per_block));
  count += static_cast<std::uint64_t>(std::popcount(words_[word] & low_mask(static_cast<unsigned>(bit % 64))));
  return count;
}

std::uint64_t PrimeTable::nth_prime(std::uint64_t n) const {
  if (n == 0) throw DomainError("prime index must be at least 1");
  if (n > total_)
    throw CoverageError("prime index " + std::to_string(n) + " exceeds pi(" + std::to_string(limit_) +
                            ") = " + std::to_string(total_),
                        0);
  if (n == 1) return 2;
  const std::uint64_t target = n - 1;  // rank among odd primes
  // Last block whose starting count is below target.
  const auto it = std::lower_bound(checkpoints_.begin(), checkpoints_.end(), target);
  const std::size_t block = static_cast<std::size_t>(it - checkpoints_.begin()) - 1;
  std::uint64_t seen = checkpoints_[block];
  std::size_t word = block * (stride_ / 128);
  for (;; ++word) {
    const auto here = static_cast<std::uint64_t>(std::popcount(words_[word]));
    if (seen + here >= target) break;
    seen += here;
  }
  Word w = words_[word];
  for (std::uint64_t skip = target - seen - 1; skip > 0; --skip) w &= w - 1;
  const std::uint64_t bit = word * 64 + static_cast<std::uint64_t>(std::countr_zero(w));
  return 2 * bit + 1;
}

std::uint64_t PrimeTable::prev_prime(std::uint64_t x) const {
  if (x <= 2) return 0;
  if (x == 3) return 2;
  require_covered(x - 1, "prev_prime argument");
  // Largest odd candidate < x.
  const std::uint64_t top = (x % 2 == 0) ? x - 1 : x - 2;
  std::int64_t bit = static_cast<std::int64_t>((top - 1) / 2);
  std::int64_t word = bit / 64;
  Word w = words_[static_cast<std::size_t>(word)] & low_mask(static_cast<unsigned>(bit % 64));
  while (w == 0) {
    if (--word < 0) return 2;
    w = words_[static_cast<std::size_t>(word)];
  }
  const auto high = static_cast<std::uint64_t>(63 - std::countl_zero(w));
  return 2 * (static_cast<std::uint64_t>(word) * 64 + high) + 1;
}

std::uint64_t PrimeTable::next_prime(std::uint64_t x) const {
  PrimeCursor c = cursor(x + 1);
  const std::uint64_t p = c.next();
  if (p == 0)
    throw CoverageError("no prime above " + std::to_string(x) + " within the sieve limit " +
                            std::to_string(limit_),
                        0);
  return p;
}

PrimeCursor PrimeTable::cursor(std::uint64_t from) const {
  return PrimeCursor(std::span<const Word>(words_).first(live_words()), from);
}

std::uint64_t nth_prime_upper_bound(std::uint64_t m) {
  static constexpr std::array<std::uint64_t, 6> small{0, 2, 3, 5, 7, 11};
  if (m < small.size()) return small[m];
  const double x = static_cast<double>(m);
  return static_cast<std::uint64_t>(std::ceil(x * (std::log(x) + std::log(std::log(x))))) + 1;
}

std::uint64_t prime_count_upper_bound(std::uint64_t x) {
  if (x < 2) return 0;
  if (x < 17) return 6;
  const double v = static_cast<double>(x);
  return static_cast<std::uint64_t>(std::ceil(1.25506 * v / std::log(v))) + 1;
}

}  // namespace rprime

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

#include <bit>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "rprime/kernels.hpp"

namespace rprime {

using kernels::Word;

struct SieveOptions {
  // Odd candidates sieved per segment; rounded up to a multiple of 64.
  std::uint64_t segment_bits = std::uint64_t{1} << 18;
  // Integers between cumulative-count checkpoints; must be a multiple of 128.
  std::uint64_t checkpoint_stride = std::uint64_t{1} << 16;
  // Upper limit on the flag array plus checkpoints, in bytes.
  std::uint64_t memory_ceiling = std::uint64_t{3} << 30;
};

// Ascending walk over the primes of a PrimeTable.
class PrimeCursor {
 public:
  PrimeCursor() = default;

  // Next prime, or 0 once the table is exhausted.
  std::uint64_t next() noexcept {
    if (emit_two_) {
      emit_two_ = false;
      return 2;
    }
    while (current_ == 0) {
      if (++word_ >= words_.size()) return 0;
      current_ = words_[word_];
    }
    const auto bit = static_cast<std::uint64_t>(std::countr_zero(current_));
    current_ &= current_ - 1;
    return 2 * (word_ * 64 + bit) + 1;
  }

 private:
  friend class PrimeTable;
  PrimeCursor(std::span<const Word> words, std::uint64_t from);

  std::span<const Word> words_;
  std::size_t word_ = 0;
  Word current_ = 0;
  bool emit_two_ = false;
};

// Primality flags for every integer in [0, limit], built with a segmented
// sieve of Eratosthenes.
//
// Storage is odd-only: bit i of odd_words() flags the odd number 2i + 1, so
// twin primes occupy adjacent bits. Bits past the limit are zero and one
// zero word of padding follows the last live word. Cumulative counts at
// every checkpoint_stride integers make prime_count a checkpoint lookup plus
// a short popcount.
//
// Immutable after construction; concurrent reads are safe.
class PrimeTable {
 public:
  static PrimeTable build(std::uint64_t limit, const SieveOptions& options = {});

  static PrimeTable load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t checkpoint_stride() const noexcept { return stride_; }

  bool is_prime(std::uint64_t k) const;
  // pi(x), the number of primes <= x.
  std::uint64_t prime_count(std::uint64_t x) const;
  // The n-th prime, p_1 = 2.
  std::uint64_t nth_prime(std::uint64_t n) const;
  // pi(limit).
  std::uint64_t prime_total() const noexcept { return total_; }

  // Largest prime < x; 0 if there is none.
  std::uint64_t prev_prime(std::uint64_t x) const;
  // Smallest prime > x; CoverageError if it would lie past the limit.
  std::uint64_t next_prime(std::uint64_t x) const;

  // Cursor positioned so that next() returns the smallest prime >= from.
  PrimeCursor cursor(std::uint64_t from = 0) const;

  // Calls f(p) for each prime lo <= p <= min(hi, limit), ascending.
  template <class F>
  void for_each_prime(std::uint64_t lo, std::uint64_t hi, F&& f) const {
    PrimeCursor c = cursor(lo);
    for (std::uint64_t p = c.next(); p != 0 && p <= hi; p = c.next()) f(p);
  }

  // Includes the trailing padding word.
  std::span<const Word> odd_words() const noexcept { return words_; }
  // Words holding bits 0..bit_count-1, excluding padding.
  std::size_t live_words() const noexcept { return words_.size() - 1; }

  friend bool operator==(const PrimeTable& a, const PrimeTable& b) noexcept {
    return a.limit_ == b.limit_ && a.words_ == b.words_;
  }

 private:
  PrimeTable(std::uint64_t limit, std::uint64_t stride, std::vector<Word> words);
  void index_checkpoints();
  void require_covered(std::uint64_t x, const char* what) const;

  std::uint64_t limit_ = 0;
  std::uint64_t stride_ = 0;
  std::uint64_t total_ = 0;
  std::vector<Word> words_;
  std::vector<std::uint64_t> checkpoints_;  // odd primes before block b
};

// Proven upper bound on p_m (exact for m < 6, m(log m + log log m) above).
std::uint64_t nth_prime_upper_bound(std::uint64_t m);

// Proven upper bound on pi(x): 1.25506 x / log x for x > 1.
std::uint64_t prime_count_upper_bound(std::uint64_t x);

// Words needed to hold the odd-only flags of [0, limit], excluding padding.
constexpr std::uint64_t odd_word_count(std::uint64_t limit) noexcept {
  return ((limit + 1) / 2 + 63) / 64;
}

}  // namespace rprime

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

// Compiled with -mavx2. Nothing here may run before the dispatcher has
// confirmed CPU support.

#include <immintrin.h>

#include <bit>
#include <cassert>

#include "rprime/kernels.hpp"

namespace rprime::kernels::avx2 {
namespace {

// Nibble-lookup popcount: per-byte counts via vpshufb, summed into the four
// 64-bit lanes with vpsadbw.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

}  // namespace

std::uint64_t popcount(std::span<const Word> words) {
  const Word* p = words.data();
  const std::size_t n = words.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(p + i)));
  std::uint64_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(p[i]));
  return total;
}

std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  assert(a.size() == b.size());
  const std::size_t n = a.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(&a[i]), load(&b[i]))));
  std::uint64_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(&out[i], _mm256_and_si256(load(&a[i]), load(&b[i])));
  for (; i < n; ++i) out[i] = a[i] & b[i];
}

void or_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store(&out[i], _mm256_or_si256(load(&a[i]), load(&b[i])));
  for (; i < n; ++i) out[i] = a[i] | b[i];
}

void shift_down_one(std::span<const Word> src, std::span<Word> out) {
  assert(src.size() == out.size() + 1);
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i here = load(&src[i]);
    __m256i next = load(&src[i + 1]);
    store(&out[i], _mm256_or_si256(_mm256_srli_epi64(here, 1), _mm256_slli_epi64(next, 63)));
  }
  for (; i < n; ++i) out[i] = (src[i] >> 1) | (src[i + 1] << 63);
}

}  // namespace rprime::kernels::avx2

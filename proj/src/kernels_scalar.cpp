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

#include <bit>
#include <cassert>

#include "rprime/kernels.hpp"

namespace rprime::kernels::scalar {

std::uint64_t popcount(std::span<const Word> words) {
  std::uint64_t total = 0;
  for (Word w : words) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  assert(a.size() == b.size());
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
  return total;
}

void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
}

void or_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  assert(a.size() == b.size() && a.size() == out.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] | b[i];
}

void shift_down_one(std::span<const Word> src, std::span<Word> out) {
  assert(src.size() == out.size() + 1);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (src[i] >> 1) | (src[i + 1] << 63);
}

}  // namespace rprime::kernels::scalar

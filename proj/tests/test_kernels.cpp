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

#include <random>
#include <vector>

#include "doctest.h"
#include "rprime/errors.hpp"
#include "rprime/kernels.hpp"

namespace k = rprime::kernels;
using k::Word;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n) {
  std::vector<Word> v(n);
  for (auto& w : v) w = rng();
  return v;
}

std::uint64_t bit_popcount(const std::vector<Word>& v) {
  std::uint64_t c = 0;
  for (Word w : v)
    for (int b = 0; b < 64; ++b) c += (w >> b) & 1;
  return c;
}

}  // namespace

TEST_CASE("scalar kernels against bit-by-bit references") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {0, 1, 2, 3, 7, 64, 129}) {
    const auto a = random_words(rng, n + 1);
    const auto b = random_words(rng, n + 1);
    const std::vector<Word> an(a.begin(), a.begin() + n), bn(b.begin(), b.begin() + n);
    CHECK(k::scalar::popcount(an) == bit_popcount(an));
    std::vector<Word> both(n);
    for (std::size_t i = 0; i < n; ++i) both[i] = an[i] & bn[i];
    CHECK(k::scalar::popcount_and(an, bn) == bit_popcount(both));

    std::vector<Word> out(n);
    k::scalar::or_words(an, bn, out);
    for (std::size_t i = 0; i < n; ++i) CHECK(out[i] == (an[i] | bn[i]));

    k::scalar::shift_down_one(a, out);
    for (std::size_t j = 0; j < 64 * n; ++j) {
      const Word want = (a[(j + 1) / 64] >> ((j + 1) % 64)) & 1;
      const Word got = (out[j / 64] >> (j % 64)) & 1;
      REQUIRE(got == want);
    }
  }
}

TEST_CASE("avx2 kernels match scalar") {
  if (!k::isa_supported(k::Isa::avx2)) {
    MESSAGE("avx2 unavailable; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(11);
  for (std::size_t n = 0; n < 70; ++n) {
    const auto a = random_words(rng, n + 1);
    auto b = random_words(rng, n + 1);
    if (n % 5 == 0) std::fill(b.begin(), b.end(), ~Word{0});
    const std::span<const Word> an(a.data(), n), bn(b.data(), n);
    CHECK(k::avx2::popcount(an) == k::scalar::popcount(an));
    CHECK(k::avx2::popcount_and(an, bn) == k::scalar::popcount_and(an, bn));
    std::vector<Word> s(n), v(n);
    k::scalar::and_words(an, bn, s);
    k::avx2::and_words(an, bn, v);
    CHECK(s == v);
    k::scalar::or_words(an, bn, s);
    k::avx2::or_words(an, bn, v);
    CHECK(s == v);
    k::scalar::shift_down_one(a, s);
    k::avx2::shift_down_one(a, v);
    CHECK(s == v);
  }
  // Large buffers cross every unrolled block boundary.
  const auto big = random_words(rng, 100'003);
  const std::span<const Word> body(big.data(), big.size() - 1);
  CHECK(k::avx2::popcount(body) == k::scalar::popcount(body));
  std::vector<Word> s(body.size()), v(body.size());
  k::scalar::shift_down_one(big, s);
  k::avx2::shift_down_one(big, v);
  CHECK(s == v);
}

TEST_CASE("dispatch") {
  const k::Isa before = k::active_isa();
  CHECK(k::isa_supported(k::Isa::scalar));
  k::force_isa(k::Isa::scalar);
  CHECK(k::active_isa() == k::Isa::scalar);
  const std::vector<Word> w{0xff, 0x1};
  CHECK(k::popcount(w) == 9);
  if (!k::isa_supported(k::Isa::avx2)) CHECK_THROWS_AS(k::force_isa(k::Isa::avx2), rprime::DomainError);
  k::force_isa(before);
  CHECK(k::isa_name(k::Isa::avx2) == "avx2");
}

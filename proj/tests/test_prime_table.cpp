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

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rprime/errors.hpp"
#include "rprime/kernels.hpp"
#include "rprime/prime_table.hpp"

using rprime::PrimeTable;
using rprime::SieveOptions;

TEST_CASE("is_prime agrees with trial division") {
  const PrimeTable pt = PrimeTable::build(200'000);
  for (std::uint64_t k = 0; k <= 200'000; ++k) REQUIRE(pt.is_prime(k) == oracle::trial_division(k));
}

TEST_CASE("small segments and strides match the default layout") {
  const std::uint64_t limit = 1'000'003;
  const PrimeTable ref = PrimeTable::build(limit);
  for (std::uint64_t seg : {64, 192, 4096}) {
    SieveOptions o;
    o.segment_bits = seg;
    o.checkpoint_stride = 128;
    const PrimeTable pt = PrimeTable::build(limit, o);
    CHECK(pt == ref);
    CHECK(pt.prime_count(limit) == ref.prime_count(limit));
  }
}

TEST_CASE("prime_count, nth_prime, neighbours") {
  const std::uint64_t limit = 300'000;
  const auto pi = oracle::pi_table(limit);
  const auto primes = oracle::primes_upto(limit);
  SieveOptions o;
  o.checkpoint_stride = 256;
  const PrimeTable pt = PrimeTable::build(limit, o);
  CHECK(pt.prime_total() == primes.size());
  for (std::uint64_t x = 0; x <= limit; ++x) REQUIRE(pt.prime_count(x) == pi[x]);
  for (std::uint64_t n = 1; n <= primes.size(); ++n) REQUIRE(pt.nth_prime(n) == primes[n - 1]);
  CHECK(pt.prev_prime(2) == 0);
  CHECK(pt.prev_prime(3) == 2);
  CHECK(pt.prev_prime(100) == 97);
  CHECK(pt.next_prime(1) == 2);
  CHECK(pt.next_prime(97) == 101);
  CHECK_THROWS_AS(pt.next_prime(primes.back()), rprime::CoverageError);
}

TEST_CASE("cursor and for_each_prime") {
  const PrimeTable pt = PrimeTable::build(10'000);
  const auto primes = oracle::primes_upto(10'000);
  auto c = pt.cursor();
  for (std::uint64_t p : primes) REQUIRE(c.next() == p);
  CHECK(c.next() == 0);
  auto d = pt.cursor(90);
  CHECK(d.next() == 97);
  std::vector<std::uint64_t> got;
  pt.for_each_prime(2, 30, [&](std::uint64_t p) { got.push_back(p); });
  CHECK(got == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("limits at word boundaries") {
  for (std::uint64_t limit : {2, 3, 4, 126, 127, 128, 129, 130, 255, 256, 257, 30030, 30031}) {
    const PrimeTable pt = PrimeTable::build(limit);
    const auto primes = oracle::primes_upto(limit);
    CHECK(pt.prime_total() == primes.size());
    CHECK(pt.odd_words().size() == rprime::odd_word_count(limit) + 1);
    CHECK(pt.odd_words().back() == 0);
    CHECK(pt.prime_count(limit) == primes.size());
  }
}

TEST_CASE("scalar and avx2 builds are identical") {
  namespace k = rprime::kernels;
  if (!k::isa_supported(k::Isa::avx2)) return;
  const k::Isa before = k::active_isa();
  k::force_isa(k::Isa::scalar);
  const PrimeTable a = PrimeTable::build(2'000'000);
  const auto ca = a.prime_count(1'999'999);
  k::force_isa(k::Isa::avx2);
  const PrimeTable b = PrimeTable::build(2'000'000);
  CHECK(a == b);
  CHECK(b.prime_count(1'999'999) == ca);
  k::force_isa(before);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(PrimeTable::build(1), rprime::DomainError);
  const PrimeTable pt = PrimeTable::build(1000);
  CHECK_THROWS_AS(pt.is_prime(1001), rprime::CoverageError);
  CHECK_THROWS_AS(pt.prime_count(5000), rprime::CoverageError);
  try {
    (void)pt.prime_count(5000);
  } catch (const rprime::CoverageError& e) {
    CHECK(e.required() == 5000);
  }
  CHECK_THROWS_AS(pt.nth_prime(0), rprime::DomainError);
  CHECK_THROWS_AS(pt.nth_prime(169), rprime::CoverageError);
  SieveOptions tiny;
  tiny.memory_ceiling = 1024;
  CHECK_THROWS_AS(PrimeTable::build(1'000'000, tiny), rprime::ResourceError);
}

TEST_CASE("upper bounds are upper bounds") {
  const auto primes = oracle::primes_upto(2'000'000);
  for (std::uint64_t m = 1; m <= primes.size(); m += 97) CHECK(rprime::nth_prime_upper_bound(m) >= primes[m - 1]);
  const auto pi = oracle::pi_table(2'000'000);
  for (std::uint64_t x = 2; x <= 2'000'000; x += 1009) CHECK(rprime::prime_count_upper_bound(x) >= pi[x]);
}

TEST_CASE("cache round trip and corruption") {
  const auto dir = std::filesystem::temp_directory_path() / "rprime_test_prime_cache";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / "s.bin";
  const PrimeTable pt = PrimeTable::build(123'457);
  pt.save(path);
  const PrimeTable back = PrimeTable::load(path);
  CHECK(back == pt);
  CHECK(back.prime_count(100'000) == 9592);

  std::filesystem::resize_file(path, std::filesystem::file_size(path) - 8);
  CHECK_THROWS_AS(PrimeTable::load(path), rprime::CacheError);
  {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << "not a sieve";
  }
  CHECK_THROWS_AS(PrimeTable::load(path), rprime::CacheError);
  CHECK_THROWS_AS(PrimeTable::load(dir / "missing.bin"), rprime::CacheError);
  std::filesystem::remove_all(dir);
}

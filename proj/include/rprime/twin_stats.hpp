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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rprime/prime_table.hpp"
#include "rprime/ramanujan.hpp"

namespace rprime {

// Twin pairs (p, p + 2) counted by lesser member p <= bound.
struct TwinCensus {
  std::uint64_t bound = 0;
  std::uint64_t pi2 = 0;   // all pairs
  std::uint64_t pi21 = 0;  // at least one member Ramanujan
  std::uint64_t pi22 = 0;  // both members Ramanujan
  double ratio21 = 0;      // pi21 / pi2
  double ratio22 = 0;      // pi22 / pi2
  std::optional<double> ratio2221;  // pi22 / pi21, absent when pi21 = 0

  friend bool operator==(const TwinCensus&, const TwinCensus&) = default;
};

// Fills the ratio fields from the counts.
TwinCensus make_census(std::uint64_t bound, std::uint64_t pi2, std::uint64_t pi21, std::uint64_t pi22);

// Requires primes to bound + 2 and every Ramanujan prime <= bound + 2.
TwinCensus twin_census(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes);

// pi(p) - pi(p/2) + 1 == pi(q) - pi(q/2), with pi(x/2) read as pi(floor(x/2)).
// p and q must be primes with p < q.
bool check_eq3(std::uint64_t p, std::uint64_t q, const PrimeTable& primes);

struct PrimePair {
  std::uint64_t p = 0;
  std::uint64_t q = 0;

  friend bool operator==(const PrimePair&, const PrimePair&) = default;
};

// Twin pairs with 5 < p <= bound that fail check_eq3. Expected empty.
std::vector<PrimePair> check_proposition1(std::uint64_t bound, const PrimeTable& primes);

// Consecutive primes (p, q), q <= bound, satisfying check_eq3 with q
// Ramanujan and p not. Expected empty.
std::vector<PrimePair> check_proposition2(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes);

// Twin pairs, p + 2 <= bound, whose upper member is Ramanujan and lower is
// not. Expected empty.
std::vector<PrimePair> check_proposition2_twins(std::uint64_t bound, const RamanujanTable& ram,
                                                const PrimeTable& primes);

struct Corollary1Check {
  bool holds = false;
  std::uint64_t smaller_ramanujan = 0;  // pairs whose lesser member is Ramanujan
  std::uint64_t larger_ramanujan = 0;   // pairs whose upper member is Ramanujan
  std::uint64_t pi21 = 0;
  std::uint64_t pi22 = 0;
};

// Compares the one-member counts against pi21 and pi22 at bound. Since
// larger_ramanujan >= pi22 pair by pair, equality at bound also gives
// equality at every smaller x.
Corollary1Check check_corollary1(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes);

// pi21/pi2 < 4/5, pi22/pi2 > 2/5 and pi22/pi21 > 1/2, in exact arithmetic.
// bound >= 10^5.
bool check_conjecture4(std::uint64_t bound, const TwinCensus& census);

struct Conjecture4Scan {
  bool holds = false;
  std::uint64_t events = 0;  // points x checked: 10^5 and every later lesser twin
  std::optional<std::uint64_t> first_failure;
};

// The three inequalities at x = 10^5 and after every twin pair up to bound.
Conjecture4Scan check_conjecture4_strict(std::uint64_t bound, const RamanujanTable& ram, const PrimeTable& primes);

enum class TwinKind { all, at_least_one_ramanujan, both_ramanujan };

std::string_view twin_kind_name(TwinKind kind) noexcept;

// Sum of 1/p + 1/(p + 2) over qualifying twin pairs with p <= bound,
// accumulated in increasing p with compensated summation.
struct BrunPartial {
  std::uint64_t bound = 0;
  TwinKind kind = TwinKind::all;
  double sum = 0;
  std::uint64_t terms = 0;

  friend bool operator==(const BrunPartial&, const BrunPartial&) = default;
};

BrunPartial brun_partial(std::uint64_t bound, TwinKind kind, const RamanujanTable& ram, const PrimeTable& primes);

// Lesser members of the first `limit` qualifying pairs with p <= bound.
std::vector<std::uint64_t> twin_lesser_members(std::uint64_t bound, TwinKind kind, std::size_t limit,
                                               const RamanujanTable& ram, const PrimeTable& primes);

}  // namespace rprime

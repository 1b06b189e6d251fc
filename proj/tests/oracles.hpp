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

// Slow, obviously-correct references for the library under test.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

inline bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Plain sieve of Eratosthenes, one byte per integer.
inline std::vector<char> byte_sieve(std::uint64_t limit) {
  std::vector<char> is(limit + 1, 1);
  is[0] = 0;
  if (limit >= 1) is[1] = 0;
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (is[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) is[j] = 0;
  return is;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
  const auto is = byte_sieve(limit);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (is[i]) out.push_back(i);
  return out;
}

// pi(x) for every x <= limit.
inline std::vector<std::uint64_t> pi_table(std::uint64_t limit) {
  const auto is = byte_sieve(limit);
  std::vector<std::uint64_t> pi(limit + 1, 0);
  for (std::uint64_t i = 1; i <= limit; ++i) pi[i] = pi[i - 1] + (is[i] ? 1 : 0);
  return pi;
}

// R_n = 1 + max{x : pi(x) - pi(x/2) < n}, straight from the definition.
// Searches x <= limit; the caller picks limit beyond the last needed R_n
// (3 * p_{3n} is ample).
inline std::vector<std::uint64_t> ramanujan_by_definition(std::uint64_t count, std::uint64_t limit) {
  const auto pi = pi_table(limit);
  // last_with[c]: largest x with exactly c primes in (x/2, x].
  std::vector<std::uint64_t> last_with(count, 0);
  for (std::uint64_t x = 0; x <= limit; ++x) {
    const std::uint64_t c = pi[x] - pi[x / 2];
    if (c < count) last_with[c] = x;
  }
  std::vector<std::uint64_t> r(count);
  std::uint64_t max_below = 0;
  for (std::uint64_t n = 1; n <= count; ++n) {
    max_below = std::max(max_below, last_with[n - 1]);
    r[n - 1] = max_below + 1;
  }
  return r;
}

}  // namespace oracle

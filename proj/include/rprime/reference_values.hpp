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

// Published values that reproduction runs are checked against.

#include <array>
#include <cstdint>

namespace rprime::reference {

inline constexpr std::array<std::uint64_t, 21> kFirstRamanujan{
    2, 11, 17, 29, 41, 47, 59, 67, 71, 97, 101, 107, 127, 149, 151, 167, 179, 181, 227, 229, 233};

inline constexpr std::array<std::uint64_t, 23> kFirstRho{1,  5,  7,  10, 13, 15, 17, 19, 20, 25, 26, 28,
                                                          31, 35, 36, 39, 41, 42, 49, 50, 51, 52, 53};

// Longest runs below 10^n, n = 1..9.
struct RunRow {
  unsigned decade;
  std::uint64_t p_thousandths;
  std::uint64_t expected_ram;
  std::uint64_t actual_ram;
  std::uint64_t expected_nonram;
  std::uint64_t actual_nonram;
};

inline constexpr std::array<RunRow, 9> kRunTable{{
    {1, 250, 1, 1, 2, 3},
    {2, 400, 3, 2, 5, 4},
    {3, 429, 6, 5, 8, 7},
    {4, 455, 8, 13, 11, 13},
    {5, 465, 11, 13, 14, 20},
    {6, 471, 14, 20, 17, 36},
    {7, 476, 17, 21, 20, 47},
    {8, 479, 21, 26, 23, 47},
    {9, 482, 24, 31, 26, 65},
}};

// Twin-pair counts below 10^n. Ratios in thousandths; kUndefined for "--".
inline constexpr std::uint64_t kUndefined = ~std::uint64_t{0};

struct TwinRow {
  unsigned decade;
  std::uint64_t pi2;
  std::uint64_t pi21;
  std::uint64_t pi22;
  std::uint64_t ratio21;
  std::uint64_t ratio22;
  std::uint64_t ratio2221;
};

inline constexpr std::array<TwinRow, 9> kTwinTable{{
    {1, 2, 0, 0, 0, 0, kUndefined},
    {2, 8, 6, 0, 750, 0, 0},
    {3, 35, 28, 10, 800, 286, 357},
    {4, 205, 167, 73, 815, 356, 437},
    {5, 1224, 694, 508, 788, 415, 527},
    {6, 8169, 6305, 3468, 772, 425, 550},
    {7, 58980, 45082, 25629, 764, 434, 568},
    {8, 440312, 335919, 194614, 763, 442, 579},
    {9, 3424506, 2605867, 1537504, 761, 449, 590},
}};

// Entries of the two tables above that disagree with direct computation.
enum class Column { actual_nonram, pi21, ratio22 };

struct Erratum {
  unsigned decade;
  Column column;
  std::uint64_t published;
  std::uint64_t corrected;
};

inline constexpr std::array<Erratum, 3> kErrata{{
    {4, Column::actual_nonram, 13, 10},
    {5, Column::pi21, 694, 964},
    {7, Column::ratio22, 434, 435},
}};

constexpr RunRow corrected_run_row(unsigned decade) {
  RunRow row = kRunTable[decade - 1];
  for (const Erratum& e : kErrata)
    if (e.decade == decade && e.column == Column::actual_nonram) row.actual_nonram = e.corrected;
  return row;
}

constexpr TwinRow corrected_twin_row(unsigned decade) {
  TwinRow row = kTwinTable[decade - 1];
  for (const Erratum& e : kErrata) {
    if (e.decade != decade) continue;
    if (e.column == Column::pi21) row.pi21 = e.corrected;
    if (e.column == Column::ratio22) row.ratio22 = e.corrected;
  }
  return row;
}

// Smallest prime starting a block of n Ramanujan / non-Ramanujan primes.
inline constexpr std::array<std::uint64_t, 15> kFirstRamanujanRunStart{
    2, 67, 227, 227, 227, 2657, 2657, 2657, 2657, 2657, 2657, 2657, 2657, 562871, 793487};
inline constexpr std::array<std::uint64_t, 17> kFirstNonRamanujanRunStart{
    3, 3, 3, 73, 191, 191, 509, 2539, 2539, 5279, 9901, 9901, 9901, 11593, 11593, 55343, 55343};

// First sharp run of length r = 1..11.
inline constexpr std::array<std::uint64_t, 11> kFirstSharpRun{
    11, 4919, 1439, 7187, 37547, 210143, 3376943, 663563, 4429739, 17939627, 12034427};

}  // namespace rprime::reference

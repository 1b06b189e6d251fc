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

// Word-parallel bit kernels over packed 64-bit flag arrays.
//
// Every kernel has a portable scalar reference in kernels::scalar and, where
// the build and the CPU allow it, a vectorized variant. The free functions in
// kernels:: dispatch to the best variant detected at first use; tests pin the
// variant with force_isa() and compare against the scalar reference.

#include <cstdint>
#include <span>
#include <string_view>

namespace rprime::kernels {

using Word = std::uint64_t;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

// True if this build contains the variant and the running CPU supports it.
bool isa_supported(Isa isa) noexcept;

// The variant used by the dispatching entry points. Defaults to the best
// supported one; RPRIME_KERNELS=scalar|avx2 in the environment overrides.
Isa active_isa() noexcept;

// Throws DomainError if isa is not supported.
void force_isa(Isa isa);

// Number of set bits in words.
std::uint64_t popcount(std::span<const Word> words);

// Number of set bits in a[i] & b[i]. Sizes must match.
std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b);

// out[i] = a[i] & b[i].
void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);

// out[i] = a[i] | b[i].
void or_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);

// Shifts a bit string toward lower indices by one: bit j of out is bit j + 1
// of src. src must hold out.size() + 1 words; the extra word supplies the
// incoming top bit.
void shift_down_one(std::span<const Word> src, std::span<Word> out);

namespace scalar {
std::uint64_t popcount(std::span<const Word> words);
std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b);
void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
void or_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
void shift_down_one(std::span<const Word> src, std::span<Word> out);
}  // namespace scalar

namespace avx2 {
std::uint64_t popcount(std::span<const Word> words);
std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b);
void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
void or_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out);
void shift_down_one(std::span<const Word> src, std::span<Word> out);
}  // namespace avx2

}  // namespace rprime::kernels

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

#include <atomic>
#include <cstdlib>
#include <string>

#include "rprime/errors.hpp"
#include "rprime/kernels.hpp"

namespace rprime::kernels {
namespace {

bool cpu_has_avx2() noexcept {
#if defined(RPRIME_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() noexcept {
  if (const char* env = std::getenv("RPRIME_KERNELS")) {
    std::string_view requested{env};
    if (requested == "scalar") return Isa::scalar;
    if (requested == "avx2" && cpu_has_avx2()) return Isa::avx2;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  return isa == Isa::scalar || (isa == Isa::avx2 && cpu_has_avx2());
}

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_supported(isa))
    throw DomainError("kernel variant " + std::string(isa_name(isa)) + " is not supported here");
  selected().store(isa, std::memory_order_relaxed);
}

#if defined(RPRIME_HAVE_AVX2_TU)
#define RPRIME_DISPATCH(fn, ...) \
  (active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define RPRIME_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

std::uint64_t popcount(std::span<const Word> words) { return RPRIME_DISPATCH(popcount, words); }

std::uint64_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  return RPRIME_DISPATCH(popcount_and, a, b);
}

void and_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  RPRIME_DISPATCH(and_words, a, b, out);
}

void or_words(std::span<const Word> a, std::span<const Word> b, std::span<Word> out) {
  RPRIME_DISPATCH(or_words, a, b, out);
}

void shift_down_one(std::span<const Word> src, std::span<Word> out) {
  RPRIME_DISPATCH(shift_down_one, src, out);
}

#undef RPRIME_DISPATCH

}  // namespace rprime::kernels

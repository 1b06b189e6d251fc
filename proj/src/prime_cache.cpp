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

// Binary cache of a sieved flag array.
//
// Layout, little-endian:
//   char[8]  magic "RPRMSIEV"
//   u32      format version
//   u32      reserved (0)
//   u64      limit
//   u64      checkpoint stride
//   u64      word count (live words, padding excluded)
//   u64[]    flag words
// Checkpoints are rebuilt on load.

#include <cstring>
#include <fstream>

#include "rprime/errors.hpp"
#include "rprime/prime_table.hpp"

namespace rprime {
namespace {

constexpr char kMagic[8] = {'R', 'P', 'R', 'M', 'S', 'I', 'E', 'V'};
constexpr std::uint32_t kVersion = 1;

struct Header {
  char magic[8];
  std::uint32_t version;
  std::uint32_t reserved;
  std::uint64_t limit;
  std::uint64_t stride;
  std::uint64_t words;
};
static_assert(sizeof(Header) == 40);

}  // namespace

void PrimeTable::save(const std::filesystem::path& path) const {
  Header h{};
  std::memcpy(h.magic, kMagic, sizeof kMagic);
  h.version = kVersion;
  h.limit = limit_;
  h.stride = stride_;
  h.words = live_words();

  // Write to a sibling and rename so readers never see a partial file.
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(&h), sizeof h);
    out.write(reinterpret_cast<const char*>(words_.data()),
              static_cast<std::streamsize>(h.words * sizeof(Word)));
    if (!out) throw CacheError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

PrimeTable PrimeTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open " + path.string());
  Header h{};
  in.read(reinterpret_cast<char*>(&h), sizeof h);
  if (!in || std::memcmp(h.magic, kMagic, sizeof kMagic) != 0)
    throw CacheError(path.string() + " is not a sieve cache");
  if (h.version != kVersion) throw CacheError(path.string() + " has an unsupported cache version");
  if (h.limit < 2 || h.stride == 0 || h.stride % 128 != 0 || h.words != odd_word_count(h.limit))
    throw CacheError(path.string() + " has an inconsistent header");

  std::vector<Word> words(h.words + 1, 0);
  in.read(reinterpret_cast<char*>(words.data()), static_cast<std::streamsize>(h.words * sizeof(Word)));
  if (!in || in.peek() != std::ifstream::traits_type::eof())
    throw CacheError(path.string() + " is truncated or has trailing data");
  return PrimeTable(h.limit, h.stride, std::move(words));
}

}  // namespace rprime

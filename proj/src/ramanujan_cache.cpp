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

// Binary cache of computed Ramanujan primes.
//
// Layout, little-endian:
//   char[8]  magic "RPRMRAMA"
//   u32      format version
//   u32      reserved (0)
//   u64      value count
//   u64      scan limit (last k examined)
//   u64      completeness bound
//   u64[]    values, strictly increasing

#include <cstring>
#include <fstream>

#include "rprime/errors.hpp"
#include "rprime/ramanujan.hpp"

namespace rprime {
namespace {

constexpr char kMagic[8] = {'R', 'P', 'R', 'M', 'R', 'A', 'M', 'A'};
constexpr std::uint32_t kVersion = 1;

struct Header {
  char magic[8];
  std::uint32_t version;
  std::uint32_t reserved;
  std::uint64_t count;
  std::uint64_t scan_limit;
  std::uint64_t complete_below;
};
static_assert(sizeof(Header) == 40);

}  // namespace

void RamanujanTable::save(const std::filesystem::path& path) const {
  Header h{};
  std::memcpy(h.magic, kMagic, sizeof kMagic);
  h.version = kVersion;
  h.count = values_.size();
  h.scan_limit = scan_limit_;
  h.complete_below = complete_below_;

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(&h), sizeof h);
    out.write(reinterpret_cast<const char*>(values_.data()),
              static_cast<std::streamsize>(values_.size() * sizeof(std::uint64_t)));
    if (!out) throw CacheError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

RamanujanTable RamanujanTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open " + path.string());
  Header h{};
  in.read(reinterpret_cast<char*>(&h), sizeof h);
  if (!in || std::memcmp(h.magic, kMagic, sizeof kMagic) != 0)
    throw CacheError(path.string() + " is not a Ramanujan cache");
  if (h.version != kVersion) throw CacheError(path.string() + " has an unsupported cache version");

  std::vector<std::uint64_t> values(h.count);
  in.read(reinterpret_cast<char*>(values.data()), static_cast<std::streamsize>(h.count * sizeof(std::uint64_t)));
  if (!in || in.peek() != std::ifstream::traits_type::eof())
    throw CacheError(path.string() + " is truncated or has trailing data");
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] <= values[i - 1]) throw CacheError(path.string() + " holds unordered values");
  if (!values.empty() && (values.front() != 2 || values.back() >= h.complete_below))
    throw CacheError(path.string() + " has an inconsistent header");
  return RamanujanTable(std::move(values), h.scan_limit, h.complete_below);
}

}  // namespace rprime

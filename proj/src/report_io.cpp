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

#include "rprime/report_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

#include "rprime/errors.hpp"

namespace rprime::io {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Non-empty lines after the header, each split into `columns` fields.
std::vector<std::vector<std::string_view>> csv_rows(std::string_view text, std::string_view header,
                                                    std::size_t columns) {
  std::vector<std::vector<std::string_view>> rows;
  bool seen_header = false;
  for (std::string_view line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!seen_header) {
      if (line != header) throw DomainError("unexpected CSV header: " + std::string(line));
      seen_header = true;
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != columns) throw DomainError("CSV row has the wrong number of fields: " + std::string(line));
    rows.push_back(std::move(fields));
  }
  if (!seen_header) throw DomainError("CSV text has no header");
  return rows;
}

std::uint64_t to_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DomainError("not an integer: " + std::string(s));
  return v;
}

double to_double(std::string_view s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DomainError("not a number: " + std::string(s));
  return v;
}

std::string exact(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string decade_column(std::uint64_t bound) {
  const int d = decade_of(bound);
  return d < 0 ? std::string() : std::to_string(d);
}

RunReport rebuild_run_report(std::uint64_t bound, std::uint64_t ram_count, std::uint64_t prime_count,
                             std::uint64_t longest_ram, std::uint64_t longest_nonram) {
  RunReport r;
  r.bound = bound;
  r.ramanujan_count = ram_count;
  r.prime_count = prime_count;
  r.p_n = static_cast<double>(ram_count) / static_cast<double>(prime_count);
  r.longest_ram = longest_ram;
  r.longest_nonram = longest_nonram;
  r.expected_ram = expected_run_length(prime_count, r.p_n);
  r.expected_nonram = expected_run_length(prime_count, 1.0 - r.p_n);
  r.variance_ram = run_variance(r.p_n);
  r.variance_nonram = run_variance(1.0 - r.p_n);
  return r;
}

constexpr std::string_view kRunsHeader =
    "n,P_n,expected_ram,actual_ram,expected_nonram,actual_nonram,bound,ramanujan_count,prime_count";
constexpr std::string_view kTwinsHeader = "n,pi2,pi21,pi22,ratio21,ratio22,ratio2221,bound";
constexpr std::string_view kBrunHeader = "bound,kind,sum,terms,sum_exact";

}  // namespace

std::uint64_t ratio_thousandths(std::uint64_t num, std::uint64_t den) {
  const auto scaled = static_cast<unsigned __int128>(num) * 2000 + den;
  return static_cast<std::uint64_t>(scaled / (static_cast<unsigned __int128>(den) * 2));
}

std::string ratio3(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return "--";
  const std::uint64_t t = ratio_thousandths(num, den);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%03llu", static_cast<unsigned long long>(t / 1000),
                static_cast<unsigned long long>(t % 1000));
  return buf;
}

std::string significant(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

int decade_of(std::uint64_t bound) {
  int d = 0;
  std::uint64_t v = 1;
  while (v < bound && d < 19) {
    v *= 10;
    ++d;
  }
  return v == bound ? d : -1;
}

std::uint64_t parse_count(std::string_view text) {
  if (text.empty()) throw DomainError("empty number");
  const std::size_t e = text.find_first_of("eE");
  std::string_view mantissa = text.substr(0, e);
  std::int64_t exponent = 0;
  if (e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (exp_text.empty() || ec != std::errc{} || ptr != exp_text.data() + exp_text.size())
      throw DomainError("bad exponent in " + std::string(text));
  }
  std::string digits;
  const std::size_t dot = mantissa.find('.');
  if (dot != std::string_view::npos) {
    digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
    exponent -= static_cast<std::int64_t>(mantissa.size() - dot - 1);
  } else {
    digits = std::string(mantissa);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("not a non-negative number: " + std::string(text));
  while (exponent < 0) {
    if (digits.back() != '0') throw DomainError("not an integer: " + std::string(text));
    digits.pop_back();
    ++exponent;
    if (digits.empty()) digits = "0";
  }
  if (exponent > 19) throw DomainError("number too large: " + std::string(text));
  digits.append(static_cast<std::size_t>(exponent), '0');
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  if (digits.size() > 20 || (digits.size() == 20 && digits > "18446744073709551615"))
    throw DomainError("number too large: " + std::string(text));
  return to_u64(digits);
}

std::string runs_csv(const std::vector<RunReport>& rows) {
  std::ostringstream out;
  out << kRunsHeader << '\n';
  for (const RunReport& r : rows) {
    out << decade_column(r.bound) << ',' << ratio3(r.ramanujan_count, r.prime_count) << ','
        << round_half_up(r.expected_ram) << ',' << r.longest_ram << ',' << round_half_up(r.expected_nonram) << ','
        << r.longest_nonram << ',' << r.bound << ',' << r.ramanujan_count << ',' << r.prime_count << '\n';
  }
  return out.str();
}

std::vector<RunReport> parse_runs_csv(std::string_view text) {
  std::vector<RunReport> out;
  for (const auto& f : csv_rows(text, kRunsHeader, 9))
    out.push_back(rebuild_run_report(to_u64(f[6]), to_u64(f[7]), to_u64(f[8]), to_u64(f[3]), to_u64(f[5])));
  return out;
}

nlohmann::json to_json(const RunReport& r) {
  return {{"bound", r.bound},
          {"ramanujan_count", r.ramanujan_count},
          {"prime_count", r.prime_count},
          {"p_n", r.p_n},
          {"p_n_display", ratio3(r.ramanujan_count, r.prime_count)},
          {"longest_ram", r.longest_ram},
          {"longest_nonram", r.longest_nonram},
          {"expected_ram", r.expected_ram},
          {"expected_nonram", r.expected_nonram},
          {"expected_ram_rounded", round_half_up(r.expected_ram)},
          {"expected_nonram_rounded", round_half_up(r.expected_nonram)},
          {"variance_ram", r.variance_ram},
          {"variance_nonram", r.variance_nonram}};
}

RunReport run_report_from_json(const nlohmann::json& j) {
  RunReport r;
  r.bound = j.at("bound").get<std::uint64_t>();
  r.ramanujan_count = j.at("ramanujan_count").get<std::uint64_t>();
  r.prime_count = j.at("prime_count").get<std::uint64_t>();
  r.p_n = j.at("p_n").get<double>();
  r.longest_ram = j.at("longest_ram").get<std::uint64_t>();
  r.longest_nonram = j.at("longest_nonram").get<std::uint64_t>();
  r.expected_ram = j.at("expected_ram").get<double>();
  r.expected_nonram = j.at("expected_nonram").get<double>();
  r.variance_ram = j.at("variance_ram").get<double>();
  r.variance_nonram = j.at("variance_nonram").get<double>();
  return r;
}

std::string twins_csv(const std::vector<TwinCensus>& rows) {
  std::ostringstream out;
  out << kTwinsHeader << '\n';
  for (const TwinCensus& c : rows) {
    out << decade_column(c.bound) << ',' << c.pi2 << ',' << c.pi21 << ',' << c.pi22 << ',' << ratio3(c.pi21, c.pi2)
        << ',' << ratio3(c.pi22, c.pi2) << ',' << ratio3(c.pi22, c.pi21) << ',' << c.bound << '\n';
  }
  return out.str();
}

std::vector<TwinCensus> parse_twins_csv(std::string_view text) {
  std::vector<TwinCensus> out;
  for (const auto& f : csv_rows(text, kTwinsHeader, 8))
    out.push_back(make_census(to_u64(f[7]), to_u64(f[1]), to_u64(f[2]), to_u64(f[3])));
  return out;
}

nlohmann::json to_json(const TwinCensus& c) {
  nlohmann::json j{{"bound", c.bound},
                   {"pi2", c.pi2},
                   {"pi21", c.pi21},
                   {"pi22", c.pi22},
                   {"ratio21", c.ratio21},
                   {"ratio22", c.ratio22},
                   {"ratio21_display", ratio3(c.pi21, c.pi2)},
                   {"ratio22_display", ratio3(c.pi22, c.pi2)},
                   {"ratio2221_display", ratio3(c.pi22, c.pi21)}};
  j["ratio2221"] = c.ratio2221 ? nlohmann::json(*c.ratio2221) : nlohmann::json(nullptr);
  return j;
}

TwinCensus twin_census_from_json(const nlohmann::json& j) {
  TwinCensus c;
  c.bound = j.at("bound").get<std::uint64_t>();
  c.pi2 = j.at("pi2").get<std::uint64_t>();
  c.pi21 = j.at("pi21").get<std::uint64_t>();
  c.pi22 = j.at("pi22").get<std::uint64_t>();
  c.ratio21 = j.at("ratio21").get<double>();
  c.ratio22 = j.at("ratio22").get<double>();
  if (!j.at("ratio2221").is_null()) c.ratio2221 = j.at("ratio2221").get<double>();
  return c;
}

TwinKind parse_twin_kind(std::string_view name) {
  if (name == "all") return TwinKind::all;
  if (name == "one") return TwinKind::at_least_one_ramanujan;
  if (name == "both") return TwinKind::both_ramanujan;
  throw DomainError("unknown twin kind: " + std::string(name));
}

std::string brun_csv(const std::vector<BrunPartial>& rows) {
  std::ostringstream out;
  out << kBrunHeader << '\n';
  for (const BrunPartial& b : rows)
    out << b.bound << ',' << twin_kind_name(b.kind) << ',' << significant(b.sum, 10) << ',' << b.terms << ','
        << exact(b.sum) << '\n';
  return out.str();
}

std::vector<BrunPartial> parse_brun_csv(std::string_view text) {
  std::vector<BrunPartial> out;
  for (const auto& f : csv_rows(text, kBrunHeader, 5)) {
    BrunPartial b;
    b.bound = to_u64(f[0]);
    b.kind = parse_twin_kind(f[1]);
    b.terms = to_u64(f[3]);
    b.sum = to_double(f[4]);
    out.push_back(b);
  }
  return out;
}

nlohmann::json to_json(const BrunPartial& b) {
  return {{"bound", b.bound},
          {"kind", std::string(twin_kind_name(b.kind))},
          {"sum", b.sum},
          {"sum_display", significant(b.sum, 10)},
          {"terms", b.terms}};
}

BrunPartial brun_partial_from_json(const nlohmann::json& j) {
  BrunPartial b;
  b.bound = j.at("bound").get<std::uint64_t>();
  b.kind = parse_twin_kind(j.at("kind").get<std::string>());
  b.sum = j.at("sum").get<double>();
  b.terms = j.at("terms").get<std::uint64_t>();
  return b;
}

nlohmann::json to_json(const GapRecord& g) {
  nlohmann::json j{{"run_start", g.run_start}, {"run_end", g.run_end}, {"r", g.run_length},
                   {"gap_lo", g.gap_lo},       {"gap_hi", g.gap_hi},   {"sharp", g.sharp}};
  j["enclosing_gap"] =
      g.enclosing_gap ? nlohmann::json::array({g.enclosing_gap->a, g.enclosing_gap->b}) : nlohmann::json(nullptr);
  return j;
}

GapRecord gap_record_from_json(const nlohmann::json& j) {
  GapRecord g;
  g.run_start = j.at("run_start").get<std::uint64_t>();
  g.run_end = j.at("run_end").get<std::uint64_t>();
  g.run_length = j.at("r").get<std::uint64_t>();
  g.gap_lo = j.at("gap_lo").get<std::uint64_t>();
  g.gap_hi = j.at("gap_hi").get<std::uint64_t>();
  g.sharp = j.at("sharp").get<bool>();
  if (const auto& e = j.at("enclosing_gap"); !e.is_null())
    g.enclosing_gap = PrimeGap{e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint64_t>()};
  return g;
}

std::string gap_json_lines(const std::vector<GapRecord>& records) {
  std::string out;
  for (const GapRecord& g : records) {
    out += to_json(g).dump();
    out += '\n';
  }
  return out;
}

std::vector<GapRecord> parse_gap_json_lines(std::string_view text) {
  std::vector<GapRecord> out;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty()) continue;
    out.push_back(gap_record_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

}  // namespace rprime::io

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

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rprime/errors.hpp"
#include "rprime/gap_analysis.hpp"
#include "rprime/prime_table.hpp"
#include "rprime/ramanujan.hpp"
#include "rprime/reference_values.hpp"
#include "rprime/report_io.hpp"
#include "rprime/run_stats.hpp"
#include "rprime/twin_stats.hpp"

namespace rprime::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Format { table, csv, json };

// A validation failure the user should see as exit status 1.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

// Builds sieves and Ramanujan tables on demand, reading and writing the
// cache directory when one is configured. Cache state only affects speed.
class Workspace {
 public:
  Workspace(std::optional<fs::path> cache_dir, SieveOptions options, bool verbose, std::ostream& log)
      : cache_dir_(std::move(cache_dir)), options_(options), verbose_(verbose), log_(log) {
    if (cache_dir_) fs::create_directories(*cache_dir_);
  }

  const PrimeTable& primes(std::uint64_t limit) {
    if (primes_ && primes_->limit() >= limit) return *primes_;
    const auto path = cache_path("sieve-v1-" + std::to_string(limit) + ".bin");
    primes_ = cached<PrimeTable>(path, "sieve to " + std::to_string(limit),
                                 [&] { return PrimeTable::build(limit, options_); });
    return *primes_;
  }

  const RamanujanTable& first(std::uint64_t n) {
    const PrimeTable& pt = primes(sieve_limit_for_first(n));
    return ramanujan("ramanujan-first-v1-" + std::to_string(n) + ".bin", "first " + std::to_string(n),
                     [&] { return compute_first(n, pt); });
  }

  const RamanujanTable& below(std::uint64_t x) {
    const PrimeTable& pt = primes(sieve_limit_for_below(x));
    return ramanujan("ramanujan-below-v1-" + std::to_string(x) + ".bin",
                     "Ramanujan primes below " + std::to_string(x), [&] { return compute_below(x, pt); });
  }

  const PrimeTable& current_primes() const { return *primes_; }

 private:
  std::optional<fs::path> cache_path(const std::string& name) const {
    if (!cache_dir_) return std::nullopt;
    return *cache_dir_ / name;
  }

  template <class T, class Make>
  std::unique_ptr<T> cached(const std::optional<fs::path>& path, const std::string& what, Make&& make) {
    const auto started = std::chrono::steady_clock::now();
    if (path && fs::exists(*path)) {
      try {
        auto loaded = std::make_unique<T>(T::load(*path));
        note("loaded " + what + " from " + path->string(), started);
        return loaded;
      } catch (const CacheError& e) {
        log_ << "ignoring cache: " << e.what() << '\n';
      }
    }
    auto built = std::make_unique<T>(make());
    note("computed " + what, started);
    if (path) {
      try {
        built->save(*path);
      } catch (const std::exception& e) {
        log_ << "could not write cache: " << e.what() << '\n';
      }
    }
    return built;
  }

  template <class Make>
  const RamanujanTable& ramanujan(const std::string& name, const std::string& what, Make&& make) {
    auto& slot = ramanujan_[name];
    if (!slot) slot = cached<RamanujanTable>(cache_path(name), what, make);
    return *slot;
  }

  void note(const std::string& msg, std::chrono::steady_clock::time_point started) {
    if (!verbose_) return;
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - started;
    log_ << msg << " in " << std::fixed << std::setprecision(2) << took.count() << " s\n";
  }

  std::optional<fs::path> cache_dir_;
  SieveOptions options_;
  bool verbose_;
  std::ostream& log_;
  std::unique_ptr<PrimeTable> primes_;
  std::map<std::string, std::unique_ptr<RamanujanTable>> ramanujan_;
};

std::uint64_t ten_to(unsigned e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= 10;
  return v;
}

// Decade bounds 10^1.. up to x, plus x itself if it is not a decade.
std::vector<std::uint64_t> decade_bounds(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 10; b <= x; b *= 10) {
    out.push_back(b);
    if (b > std::numeric_limits<std::uint64_t>::max() / 10) break;
  }
  if (out.empty() || out.back() != x) out.push_back(x);
  return out;
}

// Context shared by the subcommand handlers.
struct Context {
  Format format = Format::table;
  std::ostream& out;
  Workspace& ws;
};

void emit_compute(Context& ctx, const RamanujanTable& t) {
  const auto values = t.values();
  switch (ctx.format) {
    case Format::table:
      ctx.out << std::setw(10) << "n" << "  " << "R_n" << '\n';
      for (std::size_t i = 0; i < values.size(); ++i) ctx.out << std::setw(10) << i + 1 << "  " << values[i] << '\n';
      break;
    case Format::csv:
      ctx.out << "n,R_n\n";
      for (std::size_t i = 0; i < values.size(); ++i) ctx.out << i + 1 << ',' << values[i] << '\n';
      break;
    case Format::json:
      ctx.out << json{{"count", t.count()}, {"scan_limit", t.scan_limit()}, {"values", values}}.dump() << '\n';
      break;
  }
}

// A named pass/fail line, emitted in the requested format.
struct CheckLine {
  std::string check;
  bool holds;
  std::string detail;
  json extra = json::object();
};

void emit_checks(Context& ctx, const std::vector<CheckLine>& lines) {
  bool all = true;
  for (const auto& l : lines) all = all && l.holds;
  switch (ctx.format) {
    case Format::table:
      for (const auto& l : lines) ctx.out << (l.holds ? "PASS " : "FAIL ") << l.check << ": " << l.detail << '\n';
      break;
    case Format::csv:
      ctx.out << "check,holds,detail\n";
      for (const auto& l : lines) ctx.out << l.check << ',' << (l.holds ? "true" : "false") << ",\"" << l.detail << "\"\n";
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& l : lines) {
        json j = l.extra;
        j["check"] = l.check;
        j["holds"] = l.holds;
        j["detail"] = l.detail;
        arr.push_back(j);
      }
      ctx.out << json{{"holds", all}, {"checks", arr}}.dump() << '\n';
      break;
    }
  }
  if (!all) throw VerificationFailed("verification failed");
}

void verify_theorem2_cmd(Context& ctx, std::uint64_t count) {
  if (count < 2) throw DomainError("--count must be at least 2");
  const RamanujanTable& t = ctx.ws.first(count);
  const PrimeTable& pt = ctx.ws.primes(sieve_limit_for_first(4 * count / 3 + 2));
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first_failure;
  double min_margin = 1.0;
  for (std::uint64_t n = 2; n <= count; ++n) {
    const Theorem2Detail d = theorem2_detail(t, n, pt);
    min_margin = std::min(min_margin, d.min_relative_margin);
    if (!d.holds) {
      ++failures;
      if (!first_failure) first_failure = n;
    }
  }
  std::ostringstream detail;
  detail << "2n log 2n < p_2n < R_n < 4n log 4n < p_4n for 1 < n <= " << count;
  if (first_failure) detail << "; first failure at n=" << *first_failure;
  detail << "; smallest relative margin " << io::significant(min_margin, 4);
  emit_checks(ctx, {{"theorem2", failures == 0, detail.str(), {{"count", count}, {"failures", failures}}}});
}

void verify_theorem4_cmd(Context& ctx) {
  const RamanujanTable& t = ctx.ws.first(kLaishramLimit);
  const PrimeTable& pt = ctx.ws.current_primes();
  const Theorem4Result r = verify_theorem4(t, pt);
  std::ostringstream detail;
  detail << "max = " << r.max_ratio.str() << " at n=" << r.argmax_n << "; ";
  if (r.first_violation)
    detail << "n=" << *r.first_violation << " reaches 13/15";
  else
    detail << "all other n ≤ " << kLaishramLimit << " below 13/15";
  const BoundsReport no5 = max_ratio(t, kLaishramLimit, {5}, pt);
  const BoundsReport no5_10 = max_ratio(t, kLaishramLimit, {5, 10}, pt);
  emit_checks(ctx, {
                       {"theorem4", r.holds, detail.str(),
                        {{"max", r.max_ratio.str()}, {"argmax", r.argmax_n}, {"checked", r.checked}}},
                       {"max_excluding_5", no5.argmax_n == 10 && no5.r_over_p3n == Rational{97, 113},
                        "max = " + no5.r_over_p3n.str() + " at n=" + std::to_string(no5.argmax_n)},
                       {"max_excluding_5_10", no5_10.argmax_n == 2 && no5_10.r_over_p3n == Rational{11, 13},
                        "max = " + no5_10.r_over_p3n.str() + " at n=" + std::to_string(no5_10.argmax_n)},
                   });
}

void verify_conjecture1_cmd(Context& ctx, std::optional<std::uint64_t> m, std::uint64_t limit) {
  const RamanujanTable& t = ctx.ws.below(limit);
  const PrimeTable& pt = ctx.ws.current_primes();
  std::vector<std::uint64_t> ms;
  if (m) {
    ms.push_back(*m);
  } else {
    for (std::uint64_t i = 2; i <= 20; ++i) ms.push_back(i);
  }
  std::vector<CheckLine> lines;
  for (std::uint64_t mm : ms) {
    const Conjecture1Result r = verify_conjecture1(t, mm, limit, pt);
    std::ostringstream detail;
    detail << "m=" << mm << " N(m)=" << r.threshold << " checked " << r.checked << " n with R_mn < " << limit
           << ", " << r.violations.size() << " violations";
    if (r.smallest_below_threshold) detail << "; smallest n below N(m) with rho(mn) > m rho(n): " << *r.smallest_below_threshold;
    json extra{{"m", mm}, {"threshold", r.threshold}, {"checked", r.checked}, {"violations", r.violations}};
    extra["smallest_below_threshold"] =
        r.smallest_below_threshold ? json(*r.smallest_below_threshold) : json(nullptr);
    lines.push_back({"conjecture1", r.violations.empty(), detail.str(), extra});
  }
  emit_checks(ctx, lines);
}

template <class Pair>
json pairs_json(const std::vector<Pair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) arr.push_back({p.p, p.q});
  return arr;
}

void verify_propositions_cmd(Context& ctx, const std::string& which, std::uint64_t bound) {
  const RamanujanTable& t = ctx.ws.below(bound + 3);
  const PrimeTable& pt = ctx.ws.current_primes();
  std::vector<CheckLine> lines;
  auto count_line = [&](std::string name, auto failures, std::string what) {
    std::ostringstream detail;
    detail << what << " below " << bound << ": " << failures.size() << " counterexamples";
    json extra{{"bound", bound}, {"counterexamples", failures.size()}};
    lines.push_back({std::move(name), failures.empty(), detail.str(), extra});
  };
  if (which == "proposition1") {
    count_line("proposition1", check_proposition1(bound, pt), "twin pairs p > 5 failing the interval identity");
  } else if (which == "proposition2") {
    count_line("proposition2_twins", check_proposition2_twins(bound, t, pt),
               "upper twin Ramanujan with lower twin not");
    count_line("proposition2_consecutive", check_proposition2(bound, t, pt),
               "consecutive primes satisfying the identity with only the upper Ramanujan");
  } else {
    count_line("proposition3_single", check_half_successor_composite(bound, t, pt),
               "odd Ramanujan p with (p+1)/2 prime");
    count_line("proposition3_runs", check_run_intervals(bound, t, pt), "runs whose half interval holds a prime");
    count_line("proposition3_twins", check_twin_gaps(bound, t, pt), "twin Ramanujan pairs in gaps shorter than 5");
  }
  emit_checks(ctx, lines);
}

void runs_cmd(Context& ctx, unsigned max_decade, unsigned first_starts, bool check) {
  if (max_decade < 1 || max_decade > 10) throw DomainError("--max-decade must lie in 1..10");
  const RamanujanTable& t = ctx.ws.below(ten_to(max_decade));
  const PrimeTable& pt = ctx.ws.current_primes();
  const std::vector<RunReport> rows = run_table(max_decade, t, pt);

  std::vector<RunSearch> ram_starts, non_starts;
  for (unsigned len = 1; len <= first_starts; ++len) {
    ram_starts.push_back(first_run_start(len, PrimeClass::ramanujan, t, pt));
    non_starts.push_back(first_run_start(len, PrimeClass::non_ramanujan, t, pt));
  }

  switch (ctx.format) {
    case Format::table:
      ctx.out << " n    P_n  E[ram]  ram  E[non]  non\n";
      for (const RunReport& r : rows)
        ctx.out << std::setw(2) << io::decade_of(r.bound) << "  " << io::ratio3(r.ramanujan_count, r.prime_count)
                << std::setw(8) << round_half_up(r.expected_ram) << std::setw(5) << r.longest_ram << std::setw(8)
                << round_half_up(r.expected_nonram) << std::setw(5) << r.longest_nonram << '\n';
      for (unsigned i = 0; i < first_starts; ++i) {
        auto show = [](const RunSearch& s) {
          return s.start ? std::to_string(*s.start) : "none below " + std::to_string(s.searched_below);
        };
        ctx.out << "first run of " << i + 1 << ": ramanujan " << show(ram_starts[i]) << ", non-ramanujan "
                << show(non_starts[i]) << '\n';
      }
      break;
    case Format::csv:
      ctx.out << io::runs_csv(rows);
      break;
    case Format::json: {
      json arr = json::array();
      for (const RunReport& r : rows) arr.push_back(io::to_json(r));
      json doc{{"rows", arr}};
      if (first_starts > 0) {
        auto starts = [](const std::vector<RunSearch>& v) {
          json a = json::array();
          for (const auto& s : v) a.push_back(s.start ? json(*s.start) : json(nullptr));
          return a;
        };
        doc["first_run_start"] = {{"ramanujan", starts(ram_starts)}, {"non_ramanujan", starts(non_starts)}};
      }
      ctx.out << doc.dump() << '\n';
      break;
    }
  }

  if (check) {
    for (const RunReport& r : rows) {
      const auto ref = reference::corrected_run_row(static_cast<unsigned>(io::decade_of(r.bound)));
      const bool ok = io::ratio_thousandths(r.ramanujan_count, r.prime_count) == ref.p_thousandths &&
                      round_half_up(r.expected_ram) == static_cast<std::int64_t>(ref.expected_ram) &&
                      r.longest_ram == ref.actual_ram &&
                      round_half_up(r.expected_nonram) == static_cast<std::int64_t>(ref.expected_nonram) &&
                      r.longest_nonram == ref.actual_nonram;
      if (!ok) throw VerificationFailed("row 10^" + std::to_string(ref.decade) + " differs from the published table");
    }
  }
}

void twins_cmd(Context& ctx, std::uint64_t bound, bool strict, bool check) {
  if (bound < 3) throw DomainError("--bound must be at least 3");
  const RamanujanTable& t = ctx.ws.below(bound + 3);
  const PrimeTable& pt = ctx.ws.current_primes();
  std::vector<TwinCensus> rows;
  for (std::uint64_t b : decade_bounds(bound)) rows.push_back(twin_census(b, t, pt));

  std::optional<Conjecture4Scan> scan;
  if (strict) scan = check_conjecture4_strict(bound, t, pt);
  const Corollary1Check corollary = check_corollary1(bound, t, pt);

  switch (ctx.format) {
    case Format::table:
      ctx.out << std::setw(14) << "bound" << std::setw(10) << "pi2" << std::setw(10) << "pi21" << std::setw(10)
              << "pi22" << "  pi21/pi2  pi22/pi2  pi22/pi21\n";
      for (const TwinCensus& c : rows)
        ctx.out << std::setw(14) << c.bound << std::setw(10) << c.pi2 << std::setw(10) << c.pi21 << std::setw(10)
                << c.pi22 << std::setw(10) << io::ratio3(c.pi21, c.pi2) << std::setw(10) << io::ratio3(c.pi22, c.pi2)
                << std::setw(11) << io::ratio3(c.pi22, c.pi21) << '\n';
      ctx.out << "one-member counts (smaller, larger Ramanujan): " << corollary.smaller_ramanujan << ", "
              << corollary.larger_ramanujan << (corollary.holds ? " match" : " MISMATCH") << '\n';
      if (scan)
        ctx.out << "twin-ratio inequalities from 10^5 to " << bound << " at " << scan->events << " points: "
                << (scan->holds ? "hold" : "fail at " + std::to_string(*scan->first_failure)) << '\n';
      break;
    case Format::csv:
      ctx.out << io::twins_csv(rows);
      break;
    case Format::json: {
      json arr = json::array();
      for (const TwinCensus& c : rows) arr.push_back(io::to_json(c));
      json doc{{"rows", arr},
               {"corollary1",
                {{"holds", corollary.holds},
                 {"smaller_ramanujan", corollary.smaller_ramanujan},
                 {"larger_ramanujan", corollary.larger_ramanujan}}}};
      if (scan) {
        doc["conjecture4_strict"] = {{"holds", scan->holds}, {"events", scan->events}};
        doc["conjecture4_strict"]["first_failure"] = scan->first_failure ? json(*scan->first_failure) : json(nullptr);
      }
      ctx.out << doc.dump() << '\n';
      break;
    }
  }

  if (!corollary.holds) throw VerificationFailed("one-member twin counts disagree");
  if (scan && !scan->holds) throw VerificationFailed("twin-ratio inequalities fail");
  if (check) {
    for (const TwinCensus& c : rows) {
      const int d = io::decade_of(c.bound);
      if (d < 1 || d > 9) continue;
      const auto ref = reference::corrected_twin_row(static_cast<unsigned>(d));
      const bool ratios_ok = ref.ratio2221 == reference::kUndefined
                                 ? c.pi21 == 0
                                 : io::ratio_thousandths(c.pi22, c.pi21) == ref.ratio2221;
      if (c.pi2 != ref.pi2 || c.pi21 != ref.pi21 || c.pi22 != ref.pi22 ||
          io::ratio_thousandths(c.pi21, c.pi2) != ref.ratio21 || io::ratio_thousandths(c.pi22, c.pi2) != ref.ratio22 ||
          !ratios_ok)
        throw VerificationFailed("row 10^" + std::to_string(d) + " differs from the published table");
    }
  }
}

void brun_cmd(Context& ctx, TwinKind kind, std::uint64_t bound) {
  const RamanujanTable& t = ctx.ws.below(bound + 3);
  const PrimeTable& pt = ctx.ws.current_primes();
  const BrunPartial b = brun_partial(bound, kind, t, pt);
  switch (ctx.format) {
    case Format::table:
      ctx.out << "kind=" << twin_kind_name(kind) << " bound=" << bound << " sum=" << io::significant(b.sum, 10)
              << " terms=" << b.terms << '\n';
      break;
    case Format::csv:
      ctx.out << io::brun_csv({b});
      break;
    case Format::json:
      ctx.out << io::to_json(b).dump() << '\n';
      break;
  }
}

void emit_gap_records(Context& ctx, const std::vector<GapRecord>& records) {
  if (ctx.format == Format::json) {
    ctx.out << io::gap_json_lines(records);
    return;
  }
  if (ctx.format == Format::csv) {
    ctx.out << "run_start,run_end,r,gap_lo,gap_hi,sharp,gap_a,gap_b\n";
    for (const GapRecord& g : records)
      ctx.out << g.run_start << ',' << g.run_end << ',' << g.run_length << ',' << g.gap_lo << ',' << g.gap_hi << ','
              << (g.sharp ? "true" : "false") << ',' << (g.enclosing_gap ? std::to_string(g.enclosing_gap->a) : "")
              << ',' << (g.enclosing_gap ? std::to_string(g.enclosing_gap->b) : "") << '\n';
    return;
  }
  ctx.out << std::setw(3) << "r" << std::setw(12) << "start" << std::setw(12) << "end" << std::setw(12) << "gap_lo"
          << std::setw(12) << "gap_hi" << "  sharp  enclosing\n";
  for (const GapRecord& g : records) {
    ctx.out << std::setw(3) << g.run_length << std::setw(12) << g.run_start << std::setw(12) << g.run_end
            << std::setw(12) << g.gap_lo << std::setw(12) << g.gap_hi << (g.sharp ? "  yes  " : "  no   ");
    if (g.enclosing_gap) ctx.out << g.enclosing_gap->a << ".." << g.enclosing_gap->b;
    ctx.out << '\n';
  }
}

void gaps_sharp_cmd(Context& ctx, std::uint64_t max_run, std::uint64_t bound) {
  if (max_run < 1) throw DomainError("--max-run must be at least 1");
  const RamanujanTable& t = ctx.ws.below(bound);
  const PrimeTable& pt = ctx.ws.current_primes();
  std::vector<GapRecord> records;
  std::vector<std::uint64_t> missing;
  for (std::uint64_t r = 1; r <= max_run; ++r) {
    const SharpSearch s = first_sharp_run(r, t, pt, bound);
    if (s.record)
      records.push_back(*s.record);
    else
      missing.push_back(r);
  }
  emit_gap_records(ctx, records);
  if (!missing.empty()) {
    std::string list;
    for (auto r : missing) list += (list.empty() ? "" : ", ") + std::to_string(r);
    throw VerificationFailed("no sharp run below " + std::to_string(bound) + " for r = " + list);
  }
}

void gaps_twin_cmd(Context& ctx, std::uint64_t bound) {
  const RamanujanTable& t = ctx.ws.below(bound);
  const PrimeTable& pt = ctx.ws.current_primes();
  std::vector<GapRecord> records;
  const auto values = t.values();
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] != values[i - 1] + 2 || values[i - 1] <= 3) continue;
    const std::uint64_t k = pt.prime_count(values[i - 1]);
    GapRecord g = gap_for_run(k, 2, t, pt);
    g.enclosing_gap = twin_gap_check(values[i - 1], values[i], t, pt);
    records.push_back(g);
  }
  emit_gap_records(ctx, records);
}

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw DomainError("unknown format " + s);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan primes: computation, verification and statistics", "rprime"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::string output;
  std::string cache_dir;
  bool verbose = false;
  std::uint64_t memory_ceiling = SieveOptions{}.memory_ceiling;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--output,-o", output, "Write the report to this file instead of stdout");
  app.add_option("--cache-dir", cache_dir, "Cache directory (default: $RPRIME_CACHE_DIR, none if unset)");
  app.add_option("--memory-ceiling", memory_ceiling, "Largest sieve allocation in bytes");
  app.add_flag("--verbose,-v", verbose, "Timing diagnostics on stderr");

  // Numeric flags are read as strings so that scientific notation works.
  std::string count_text, below_text;
  auto* compute = app.add_subcommand("compute", "List Ramanujan primes");
  auto* count_opt = compute->add_option("--count", count_text, "First N Ramanujan primes");
  auto* below_opt = compute->add_option("--below", below_text, "All Ramanujan primes below X");
  count_opt->excludes(below_opt);

  std::string verify_what, m_text, limit_text = "1e7", vbound_text = "1e6", vcount_text = "1000";
  auto* verify = app.add_subcommand("verify", "Check a bound, proposition or conjecture");
  verify->add_option("what", verify_what, "theorem2|theorem4|conjecture1|proposition1|proposition2|proposition3")
      ->required()
      ->check(CLI::IsMember(
          {"theorem2", "theorem4", "conjecture1", "proposition1", "proposition2", "proposition3"}));
  verify->add_option("--m", m_text, "Multiplier for conjecture1 (default: every m in 2..20)");
  verify->add_option("--limit", limit_text, "conjecture1: scan n with R_mn below this");
  verify->add_option("--bound", vbound_text, "proposition scans: upper bound");
  verify->add_option("--count", vcount_text, "theorem2: check 1 < n <= count");

  unsigned max_decade = 7;
  unsigned first_starts = 0;
  bool runs_check = false;
  auto* runs = app.add_subcommand("runs", "Longest runs of (non-)Ramanujan primes below 10^n");
  runs->add_option("--max-decade", max_decade, "Largest n")->check(CLI::Range(1u, 10u));
  runs->add_option("--first-starts", first_starts, "Also list first run starts for lengths 1..L");
  runs->add_flag("--check", runs_check, "Fail if a row differs from the published table");

  std::string tbound_text = "1e7";
  bool strict = false, twins_check = false;
  auto* twins = app.add_subcommand("twins", "Twin prime counts by Ramanujan membership");
  twins->add_option("--bound", tbound_text, "Largest lesser twin counted");
  twins->add_flag("--strict", strict, "Check the twin-ratio inequalities after every pair from 10^5");
  twins->add_flag("--check", twins_check, "Fail if a decade row differs from the published table");

  std::string kind_text = "all", bbound_text = "1e6";
  auto* brun = app.add_subcommand("brun", "Partial sums of reciprocals of twin primes");
  brun->add_option("--kind", kind_text, "all|one|both")->check(CLI::IsMember({"all", "one", "both"}));
  brun->add_option("--bound", bbound_text, "Largest lesser twin included");

  std::string gaps_what, max_run_text = "11", gbound_text = std::to_string(kDefaultSharpSearchBound);
  auto* gaps = app.add_subcommand("gaps", "Prime gaps forced by runs of Ramanujan primes");
  gaps->add_option("what", gaps_what, "sharp|twin-check")->required()->check(CLI::IsMember({"sharp", "twin-check"}));
  gaps->add_option("--max-run", max_run_text, "sharp: run lengths 1..R");
  gaps->add_option("--bound", gbound_text, "Search bound");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  std::optional<fs::path> cache;
  if (!cache_dir.empty()) {
    cache = cache_dir;
  } else if (const char* env = std::getenv("RPRIME_CACHE_DIR"); env && *env) {
    cache = fs::path(env);
  }

  std::ostringstream report;
  int status = kOk;
  try {
    SieveOptions options;
    options.memory_ceiling = memory_ceiling;
    Workspace ws(cache, options, verbose, err);
    Context ctx{parse_format(format), report, ws};

    try {
      if (compute->parsed()) {
        if (count_text.empty() == below_text.empty()) throw DomainError("compute needs exactly one of --count, --below");
        if (!count_text.empty()) {
          const std::uint64_t n = io::parse_count(count_text);
          if (n == 0) throw DomainError("--count must be at least 1");
          emit_compute(ctx, ws.first(n));
        } else {
          const std::uint64_t x = io::parse_count(below_text);
          if (x < 2) throw DomainError("--below must be at least 2");
          emit_compute(ctx, ws.below(x));
        }
      } else if (verify->parsed()) {
        if (verify_what == "theorem2") {
          verify_theorem2_cmd(ctx, io::parse_count(vcount_text));
        } else if (verify_what == "theorem4") {
          verify_theorem4_cmd(ctx);
        } else if (verify_what == "conjecture1") {
          std::optional<std::uint64_t> m;
          if (!m_text.empty()) m = io::parse_count(m_text);
          if (m && *m == 0) throw DomainError("--m must be at least 1");
          verify_conjecture1_cmd(ctx, m, io::parse_count(limit_text));
        } else {
          verify_propositions_cmd(ctx, verify_what, io::parse_count(vbound_text));
        }
      } else if (runs->parsed()) {
        runs_cmd(ctx, max_decade, first_starts, runs_check);
      } else if (twins->parsed()) {
        twins_cmd(ctx, io::parse_count(tbound_text), strict, twins_check);
      } else if (brun->parsed()) {
        const std::uint64_t bound = io::parse_count(bbound_text);
        if (bound < 3) throw DomainError("--bound must be at least 3");
        brun_cmd(ctx, io::parse_twin_kind(kind_text), bound);
      } else if (gaps->parsed()) {
        const std::uint64_t bound = io::parse_count(gbound_text);
        if (bound < 12) throw DomainError("--bound must be at least 12");
        if (gaps_what == "sharp")
          gaps_sharp_cmd(ctx, io::parse_count(max_run_text), bound);
        else
          gaps_twin_cmd(ctx, bound);
      }
    } catch (const VerificationFailed& e) {
      err << e.what() << '\n';
      status = kVerificationFailed;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const CoverageError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const std::bad_alloc&) {
    err << "resource error: out of memory\n";
    return kResource;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }

  if (!output.empty()) {
    std::ofstream file(output, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << output << '\n';
      return kResource;
    }
    file << report.str();
  } else {
    out << report.str();
  }
  return status;
}

}  // namespace rprime::cli

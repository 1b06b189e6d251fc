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
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "rprime/report_io.hpp"

namespace fs = std::filesystem;
using rprime::cli::run;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / name;
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("compute lists the first primes") {
  const Result r = call({"compute", "--count", "21", "--format", "csv"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("n,R_n\n1,2\n2,11\n3,17\n", 0) == 0);
  CHECK(r.out.find("\n21,233\n") != std::string::npos);
  const Result j = call({"--format", "json", "compute", "--below", "100"});
  CHECK(j.status == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["values"] == nlohmann::json({2, 11, 17, 29, 41, 47, 59, 67, 71, 97}));
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).status == 2);
  CHECK(call({"frobnicate"}).status == 2);
  CHECK(call({"compute"}).status == 2);
  CHECK(call({"compute", "--count", "abc"}).status == 2);
  CHECK(call({"compute", "--count", "1.5"}).status == 2);
  CHECK(call({"compute", "--count", "5", "--below", "100"}).status == 2);
  CHECK(call({"verify", "theorem9"}).status == 2);
  CHECK(call({"brun", "--kind", "some"}).status == 2);
  CHECK(call({"runs", "--max-decade", "0"}).status == 2);
  CHECK(call({"verify", "theorem2", "--count", "1"}).status == 2);
  CHECK(call({"--format", "xml", "compute", "--count", "3"}).status == 2);
  const Result help = call({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("compute") != std::string::npos);
}

TEST_CASE("resource limits exit 3") {
  const Result r = call({"--memory-ceiling", "4096", "compute", "--below", "1e7"});
  CHECK(r.status == 3);
  CHECK(r.out.empty());
}

TEST_CASE("failed published-table check exits 1") {
  CHECK(call({"runs", "--max-decade", "6", "--check"}).status == 0);
  CHECK(call({"twins", "--bound", "1e6", "--check", "--strict"}).status == 0);
  CHECK(call({"gaps", "sharp", "--max-run", "3", "--bound", "1000"}).status == 1);
}

TEST_CASE("verifiers pass") {
  CHECK(call({"verify", "theorem4"}).status == 0);
  CHECK(call({"verify", "theorem2", "--count", "2000"}).status == 0);
  CHECK(call({"verify", "conjecture1", "--limit", "1e6"}).status == 0);
  CHECK(call({"verify", "conjecture1", "--m", "2", "--limit", "1e5"}).status == 0);
  for (const char* p : {"proposition1", "proposition2", "proposition3"})
    CHECK(call({"verify", p, "--bound", "1e5"}).status == 0);
  const Result t4 = call({"verify", "theorem4"});
  CHECK(t4.out.find("max = 41/47 at n=5") != std::string::npos);
}

TEST_CASE("cold and warm cache runs print the same bytes") {
  const auto dir = fresh_dir("rprime_test_cli_cache");
  const std::vector<std::vector<std::string>> cmds{
      {"--cache-dir", dir.string(), "twins", "--bound", "1e6", "--format", "csv"},
      {"--cache-dir", dir.string(), "runs", "--max-decade", "6", "--format", "json"},
      {"--cache-dir", dir.string(), "compute", "--count", "5000"},
      {"--cache-dir", dir.string(), "gaps", "twin-check", "--bound", "1e5", "--format", "json"},
  };
  for (const auto& cmd : cmds) {
    const Result cold = call(cmd);
    const Result warm = call(cmd);
    CHECK(cold.status == 0);
    CHECK(warm.status == 0);
    CHECK(cold.out == warm.out);
    const Result bare = call(std::vector<std::string>(cmd.begin() + 2, cmd.end()));
    CHECK(bare.out == cold.out);
  }
  CHECK(!fs::is_empty(dir));

  // A damaged cache file is rebuilt, not trusted.
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ofstream f(entry.path(), std::ios::binary | std::ios::trunc);
    f << "junk";
  }
  const Result again = call(cmds[0]);
  CHECK(again.status == 0);
  CHECK(again.out == call(cmds[0]).out);
  fs::remove_all(dir);
}

TEST_CASE("CLI CSV and JSON output parse back") {
  const Result runs_csv = call({"runs", "--max-decade", "5", "--format", "csv"});
  const auto rows = rprime::io::parse_runs_csv(runs_csv.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[3].longest_ram == 13);
  CHECK(rows[3].longest_nonram == 10);

  const Result twins_csv = call({"twins", "--bound", "123456", "--format", "csv"});
  const auto twins = rprime::io::parse_twins_csv(twins_csv.out);
  REQUIRE(twins.size() == 6);
  CHECK(twins[4].pi21 == 964);
  CHECK(twins.back().bound == 123456);

  const Result brun = call({"brun", "--kind", "both", "--bound", "1e5", "--format", "csv"});
  const auto b = rprime::io::parse_brun_csv(brun.out);
  REQUIRE(b.size() == 1);
  CHECK(b[0].terms == 508);

  const Result gaps = call({"gaps", "sharp", "--max-run", "4", "--bound", "1e4", "--format", "json"});
  CHECK(gaps.status == 0);
  const auto recs = rprime::io::parse_gap_json_lines(gaps.out);
  REQUIRE(recs.size() == 4);
  CHECK(recs[1].run_start == 4919);
}

TEST_CASE("--output writes the report to a file") {
  const auto dir = fresh_dir("rprime_test_cli_output");
  fs::create_directories(dir);
  const auto path = dir / "out.csv";
  const Result r = call({"--output", path.string(), "--format", "csv", "compute", "--count", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(s.str() == "n,R_n\n1,2\n2,11\n3,17\n");
  fs::remove_all(dir);
}

/*
Copyright 2026 The gallai Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gallai");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = gallai_cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(GALLAI_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path temp(const char* name) { return fs::temp_directory_path() / (std::string("gallai_cli_") + name); }

}  // namespace

TEST_CASE("count") {
  auto r = cli({"count", "--n", "3", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "21\n");
  CHECK(cli({"count", "--n", "5", "--k", "4", "--method", "both"}).out == "20896\n");
  CHECK(cli({"count", "--n", "6", "--k", "2", "--method", "formula"}).out == "32768\n");
  CHECK(cli({"count", "--n", "3", "--k", "pow2:20", "--method", "exact"}).out == "3298532786176\n");
  CHECK(cli({"--threads", "2", "count", "--n", "6", "--k", "3"}).out == "210987\n");
}

TEST_CASE("exit codes") {
  auto budget = cli({"count", "--n", "8", "--k", "3"});
  CHECK(budget.code == 3);
  CHECK(budget.out.empty());
  CHECK(budget.err.find("budget") != std::string::npos);

  CHECK(cli({"count", "--n", "3"}).code == 2);
  CHECK(cli({"count", "--n", "3", "--k", "3", "--method", "magic"}).code == 2);
  CHECK(cli({"count", "--n", "3", "--k", "pow2:20", "--method", "dfs"}).code == 2);
  CHECK(cli({"--budget", "0", "count", "--n", "3", "--k", "3"}).code == 2);
  CHECK(cli({"--format", "xml", "count", "--n", "3", "--k", "3"}).code == 2);
  CHECK(cli({"table", "--n", "2..3", "--k", "2..3"}).code == 2);
  CHECK(cli({"verify", "--suite", "nope", "--n-max", "3", "--k-max", "3"}).code == 2);
  CHECK(cli({"analyze", "--input", data("missing.txt")}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("budget from the environment") {
  ::setenv("GALLAI_BUDGET", "10", 1);
  const auto r = cli({"count", "--n", "5", "--k", "3"});
  ::unsetenv("GALLAI_BUDGET");
  CHECK(r.code == 3);
  CHECK(cli({"count", "--n", "5", "--k", "3"}).code == 0);
}

TEST_CASE("analyze") {
  const auto bad = cli({"analyze", "--input", data("rainbow3.txt")});
  CHECK(bad.code == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err == "not a Gallai coloring: rainbow triangle {0,1,2}\n");

  const auto good = cli({"analyze", "--input", data("mono4.txt"), "--json"});
  REQUIRE(good.code == 0);
  const auto j = nlohmann::json::parse(good.out);
  CHECK(j["n"] == 4);
  CHECK(j["spanning_color"] == 1);
  CHECK(j["A"].size() == 4);

  const auto text = cli({"analyze", "--input", data("mono4.txt")});
  CHECK(text.out.find("gallai: true") != std::string::npos);
}

TEST_CASE("extensions") {
  CHECK(cli({"extensions", "--input", data("mono4.txt"), "--k", "3"}).out == "31\n");
  CHECK(cli({"extensions", "--input", data("rainbow3.txt"), "--k", "3"}).code == 1);
  const auto listed = cli({"extensions", "--input", data("mono4.txt"), "--k", "2", "--enumerate"});
  std::istringstream lines(listed.out);
  std::vector<std::string> all;
  for (std::string line; std::getline(lines, line);) all.push_back(line);
  REQUIRE(all.size() == 17);
  CHECK(all.back() == "16");
}

TEST_CASE("bounds") {
  CHECK(cli({"bounds", "--n", "3", "--k", "3", "--expr", "lower-bound"}).out == "21\n");
  CHECK(cli({"bounds", "--n", "14", "--k", "4", "--m", "1", "--expr", "non-extremal", "--value", "711723"}).out ==
        "16384 + 56*2^(68/5)\n711723 > 16384 + 56*2^(68/5)\n");
  CHECK(cli({"bounds", "--n", "4", "--k", "3", "--expr", "ext-ceiling", "--value", "31"}).out == "31\n31 = 31\n");
  CHECK(cli({"bounds", "--n", "4", "--k", "3", "--expr", "no-big-f"}).code == 2);
}

TEST_CASE("verify") {
  const auto r = cli({"verify", "--suite", "sandwich", "--n-max", "3", "--k-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sandwich: PASS") != std::string::npos);
  const auto csv = cli({"--format", "csv", "verify", "--suite", "sandwich", "--n-min", "3", "--n-max", "3", "--k-min",
                        "3", "--k-max", "3"});
  CHECK(csv.out.rfind("suite,n,k,status,lhs,rhs,detail\n", 0) == 0);
}

TEST_CASE("classify-all") {
  const auto r = cli({"--format", "csv", "classify-all", "--n", "5", "--k", "3"});
  CHECK(r.out == "label,count\nTwoColored,3069\nM1,0\nM2,3060\nM3,0\nM4,0\n");
}

TEST_CASE("table emission") {
  using gallai_cli::TableRow;
  CHECK(gallai_cli::emit_table({}, "csv") == "n,k,method,count,seconds\n");
  CHECK(gallai_cli::emit_table({}, "json") == "[]\n");
  const std::vector<TableRow> one{{3, "3", "dfs", "21", 0.25}};
  CHECK(gallai_cli::emit_table(one, "csv") == "n,k,method,count,seconds\n3,3,dfs,21,0.250000\n");
  const std::vector<TableRow> two{{3, "3", "dfs", "21", 0.0}, {3, "3", "exact-color", "21", 0.0}};
  const std::string csv = gallai_cli::emit_table(two, "csv");
  CHECK(csv == "n,k,method,count,seconds\n3,3,dfs,21,0.000000\n3,3,exact-color,21,0.000000\n");
  const auto j = nlohmann::json::parse(gallai_cli::emit_table(two, "json"));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["count"] == "21");
  CHECK(j[1]["k"] == "3");
  CHECK(j[0]["n"] == 3);
}

TEST_CASE("tables are reproducible without timing") {
  const std::vector<std::string> args{"--format", "csv", "--no-timing", "table", "--n", "2..5", "--k", "1..3",
                                      "--method", "both"};
  const auto a = cli(args);
  const auto b = cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("5,3,") != std::string::npos);
  const auto json = cli({"--format", "json", "--no-timing", "table", "--n", "3..3", "--k", "3..3"});
  CHECK(nlohmann::json::parse(json.out)[0]["count"] == "21");
}

TEST_CASE("--out writes atomically") {
  const fs::path target = temp("out.csv");
  fs::remove(target);
  const auto r = cli({"--out", target.string(), "--format", "csv", "--no-timing", "table", "--n", "3..3", "--k",
                      "3..3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(target) == "n,k,method,count,seconds\n3,3,exact,21,0.000000\n");
  CHECK_FALSE(fs::exists(fs::path(target.string() + ".tmp")));

  // a failing command leaves the previous file alone
  const auto fail = cli({"--out", target.string(), "count", "--n", "8", "--k", "3"});
  CHECK(fail.code == 3);
  CHECK(slurp(target) == "n,k,method,count,seconds\n3,3,exact,21,0.000000\n");
  fs::remove(target);

  const fs::path fresh = temp("never.txt");
  fs::remove(fresh);
  CHECK(cli({"--out", fresh.string(), "count", "--n", "8", "--k", "3"}).code == 3);
  CHECK_FALSE(fs::exists(fresh));

  CHECK(cli({"--out", "/nonexistent-dir/x.txt", "count", "--n", "3", "--k", "3"}).code == 2);
}

TEST_CASE("coloring files round trip byte for byte") {
  // a file already in writer order survives parse + format unchanged
  const fs::path copy = temp("mono4_copy.txt");
  std::ofstream(copy, std::ios::binary) << slurp(data("mono4.txt"));
  CHECK(cli({"analyze", "--input", copy.string()}).code == 0);
  CHECK(slurp(copy) == slurp(data("mono4.txt")));
  fs::remove(copy);
}

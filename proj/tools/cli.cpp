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

#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gallai/gallai.h"

namespace gallai_cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20260101;

struct CallError : std::runtime_error {
  CallError(gallai_status s, const std::string& message) : std::runtime_error(message), status(s) {}
  gallai_status status;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(gallai_status status) {
  if (status != GALLAI_OK) throw CallError(status, gallai_last_error());
}

struct OwnedString {
  char* text = nullptr;
  ~OwnedString() { gallai_string_free(text); }
  std::string str() const { return text == nullptr ? std::string() : std::string(text); }
};

struct ColoringHandle {
  gallai_coloring* ptr = nullptr;
  ~ColoringHandle() { gallai_coloring_free(ptr); }
};

struct Range {
  unsigned lo = 0;
  unsigned hi = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const unsigned v = static_cast<unsigned>(std::stoul(text));
      return {v, v};
    }
    const Range r{static_cast<unsigned>(std::stoul(text.substr(0, dots))),
                  static_cast<unsigned>(std::stoul(text.substr(dots + 2)))};
    if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw UsageError("malformed range '" + text + "' (expected a or a..b)");
  }
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string seconds_text(double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return buf;
}

struct Common {
  unsigned threads = 0;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = gallai_default_budget();
  std::string format = "text";
  std::string out;
  bool no_timing = false;

  gallai_options options() const {
    gallai_options o;
    gallai_options_init(&o);
    o.budget = budget;
    o.threads = threads;
    o.seed = seed;
    return o;
  }
};

struct CountArgs {
  unsigned n = 0;
  std::string k;
  std::string method = "dfs";
  std::string checkpoint;
};

struct TableArgs {
  std::string n = "2..5";
  std::string k = "2..4";
  std::string method = "exact";
};

struct ExtensionArgs {
  std::string input;
  std::string k;
  bool enumerate = false;
};

struct AnalyzeArgs {
  std::string input;
  bool json = false;
};

struct ClassifyArgs {
  unsigned n = 0;
  unsigned k = 0;
};

struct BoundsArgs {
  unsigned n = 0;
  std::string k;
  unsigned m = 0;
  unsigned t = 0;
  std::string expr;
  std::string value;
};

struct VerifyArgs {
  std::string suite;
  unsigned n_min = 1;
  unsigned n_max = 4;
  unsigned k_min = 1;
  unsigned k_max = 4;
  unsigned samples = 40;
};

gallai_method method_of(const std::string& name) {
  if (name == "dfs") return GALLAI_METHOD_DFS;
  if (name == "exact" || name == "exact-color") return GALLAI_METHOD_EXACT;
  if (name == "formula") return GALLAI_METHOD_FORMULA;
  throw UsageError("unknown method '" + name + "'");
}

std::string canonical_method(const std::string& name) {
  return name == "exact-color" ? "exact" : name;
}

TableRow count_cell(unsigned n, const std::string& k, const std::string& method, const Common& common,
                    const std::string& checkpoint) {
  gallai_options options = common.options();
  if (!checkpoint.empty()) options.checkpoint = checkpoint.c_str();
  OwnedString result;
  const auto start = std::chrono::steady_clock::now();
  check(gallai_count(n, k.c_str(), method_of(method), &options, &result.text));
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {n, k, canonical_method(method), result.str(), common.no_timing ? 0.0 : elapsed.count()};
}

std::vector<std::string> methods_for(const std::string& method) {
  if (method == "both") return {"dfs", "exact"};
  method_of(method);
  return {method};
}

void require_agreement(const std::vector<TableRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const TableRow& a = rows[i - 1];
    const TableRow& b = rows[i];
    if (a.n == b.n && a.k == b.k && a.count != b.count) {
      throw CallError(GALLAI_INTERNAL_ERROR, "methods disagree at n=" + std::to_string(a.n) + " k=" + a.k + ": " +
                                                 a.count + " (" + a.method + ") vs " + b.count + " (" + b.method +
                                                 ")");
    }
  }
}

std::string run_count(const CountArgs& args, const Common& common) {
  const bool huge = args.k.rfind("pow2:", 0) == 0;
  if (huge && method_of(args.method) != GALLAI_METHOD_EXACT) {
    throw UsageError("--k pow2:e is accepted only with --method exact");
  }
  if (args.method == "both" && !args.checkpoint.empty()) {
    throw UsageError("--checkpoint needs a single method");
  }
  std::vector<TableRow> rows;
  for (const auto& method : methods_for(args.method)) {
    rows.push_back(count_cell(args.n, args.k, method, common, args.checkpoint));
  }
  require_agreement(rows);
  if (common.format == "text") return rows.front().count + "\n";
  return emit_table(rows, common.format);
}

std::string run_table(const TableArgs& args, const Common& common) {
  if (common.format == "text") throw UsageError("table needs --format csv or json");
  const Range ns = parse_range(args.n);
  const Range ks = parse_range(args.k);
  std::vector<TableRow> rows;
  for (unsigned n = ns.lo; n <= ns.hi; ++n) {
    for (unsigned k = ks.lo; k <= ks.hi; ++k) {
      for (const auto& method : methods_for(args.method)) {
        rows.push_back(count_cell(n, std::to_string(k), method, common, std::string()));
      }
    }
  }
  require_agreement(rows);
  return emit_table(rows, common.format);
}

int fan_to_stream(const std::uint32_t* fan, std::size_t length, void* user) {
  auto& out = *static_cast<std::vector<std::vector<std::uint32_t>>*>(user);
  out.emplace_back(fan, fan + length);
  return 1;
}

std::string run_extensions(const ExtensionArgs& args, const Common& common) {
  ColoringHandle coloring;
  check(gallai_coloring_load(args.input.c_str(), &coloring.ptr));
  OwnedString count;
  check(gallai_extensions_count(coloring.ptr, args.k.c_str(), &count.text));
  std::vector<std::vector<std::uint32_t>> fans;
  if (args.enumerate) {
    unsigned long long k = 0;
    try {
      k = std::stoull(args.k);
    } catch (const std::logic_error&) {
      throw UsageError("--enumerate needs a decimal --k");
    }
    if (k > 0xFFFFFFFFULL) throw UsageError("--enumerate needs k below 2^32");
    check(gallai_extensions_enumerate(coloring.ptr, static_cast<std::uint32_t>(k), fan_to_stream, &fans, nullptr));
  }
  if (common.format == "json") {
    Json j;
    j["n"] = gallai_coloring_n(coloring.ptr);
    j["k"] = args.k;
    j["count"] = count.str();
    if (args.enumerate) j["fans"] = fans;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& fan : fans) {
    for (std::size_t i = 0; i < fan.size(); ++i) out << (i ? " " : "") << fan[i];
    out << "\n";
  }
  out << count.str() << "\n";
  return out.str();
}

std::string run_analyze(const AnalyzeArgs& args, const Common& common) {
  ColoringHandle coloring;
  check(gallai_coloring_load(args.input.c_str(), &coloring.ptr));
  OwnedString report;
  check(gallai_analyze(coloring.ptr, &report.text));
  const Json j = Json::parse(report.str());
  if (args.json || common.format == "json") return j.dump(2) + "\n";
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return out.str();
}

std::string run_classify_all(const ClassifyArgs& args, const Common& common) {
  gallai_options options = common.options();
  OwnedString histogram;
  check(gallai_classify_all(args.n, args.k, &options, &histogram.text));
  const Json j = Json::parse(histogram.str());
  if (common.format == "json") return j.dump(2) + "\n";
  std::string out = "label,count\n";
  for (const auto& [label, count] : j.items()) out += label + "," + count.dump() + "\n";
  return out;
}

std::string run_bounds(const BoundsArgs& args, const Common& common) {
  OwnedString evaluation;
  check(gallai_bound_eval(args.expr.c_str(), args.n, args.k.c_str(), args.m, args.t, &evaluation.text));
  Json j = Json::parse(evaluation.str());
  if (!args.value.empty()) {
    int ordering = 0;
    check(gallai_bound_compare(args.value.c_str(), args.expr.c_str(), args.n, args.k.c_str(), args.m, args.t,
                               &ordering));
    j["compared_value"] = args.value;
    j["ordering"] = ordering < 0 ? "<" : ordering > 0 ? ">" : "=";
  }
  if (common.format == "json") return j.dump(2) + "\n";
  std::string out = j["value"].get<std::string>() + "\n";
  if (!j["hypothesis_met"].get<bool>()) out += "hypothesis unmet: " + j["note"].get<std::string>() + "\n";
  if (j.contains("ordering")) {
    out += args.value + " " + j["ordering"].get<std::string>() + " " + j["value"].get<std::string>() + "\n";
  }
  return out;
}

std::string run_verify(const VerifyArgs& args, const Common& common, bool& passed, std::ostream& err) {
  gallai_options options = common.options();
  options.samples = args.samples;
  OwnedString report;
  int ok = 0;
  check(gallai_verify(args.suite.c_str(), args.n_min, args.n_max, args.k_min, args.k_max, &options, &report.text,
                      &ok));
  passed = ok != 0;
  const Json j = Json::parse(report.str());
  for (const auto& cell : j["cells"]) {
    if (!cell["witness"].is_null()) {
      err << "witness for " << args.suite << " n=" << cell["n"].dump() << " k=" << cell["k"].dump() << " ("
          << cell["detail"].get<std::string>() << "):\n"
          << cell["witness"].get<std::string>();
    }
  }
  if (common.format == "json") return j.dump(2) + "\n";
  std::ostringstream out;
  if (common.format == "csv") {
    out << "suite,n,k,status,lhs,rhs,detail\n";
    for (const auto& cell : j["cells"]) {
      out << csv_field(args.suite) << "," << cell["n"].dump() << "," << cell["k"].dump() << ","
          << cell["status"].get<std::string>() << "," << csv_field(cell["lhs"].get<std::string>()) << ","
          << csv_field(cell["rhs"].get<std::string>()) << "," << csv_field(cell["detail"].get<std::string>())
          << "\n";
    }
    return out.str();
  }
  for (const auto& cell : j["cells"]) {
    out << "n=" << cell["n"].dump() << " k=" << cell["k"].dump() << " " << cell["status"].get<std::string>();
    if (!cell["lhs"].get<std::string>().empty()) out << " lhs=" << cell["lhs"].get<std::string>();
    if (!cell["rhs"].get<std::string>().empty()) out << " rhs=" << cell["rhs"].get<std::string>();
    out << " " << cell["detail"].get<std::string>() << "\n";
  }
  out << args.suite << ": " << (passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

int exit_code(gallai_status status) {
  switch (status) {
    case GALLAI_OK:
      return kOk;
    case GALLAI_NOT_GALLAI:
      return kFailed;
    case GALLAI_BUDGET_EXCEEDED:
      return kBudget;
    default:
      return kUsage;
  }
}

}  // namespace

std::string emit_table(const std::vector<TableRow>& rows, std::string_view format) {
  if (format == "csv") {
    std::string out = "n,k,method,count,seconds\n";
    for (const auto& row : rows) {
      out += std::to_string(row.n) + "," + row.k + "," + row.method + "," + row.count + "," +
             seconds_text(row.seconds) + "\n";
    }
    return out;
  }
  if (format == "json") {
    Json j = Json::array();
    for (const auto& row : rows) {
      j.push_back({{"n", row.n},
                   {"k", row.k},
                   {"method", row.method},
                   {"count", row.count},
                   {"seconds", std::stod(seconds_text(row.seconds))}});
    }
    return j.dump(2) + "\n";
  }
  throw UsageError("unsupported table format '" + std::string(format) + "'");
}

void write_atomically(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream file(temp, std::ios::binary | std::ios::trunc);
    file << bytes;
    file.flush();
    if (!file) {
      std::error_code ignored;
      fs::remove(temp, ignored);
      throw CallError(GALLAI_IO_ERROR, path + ": cannot write output");
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw CallError(GALLAI_IO_ERROR, path + ": cannot write output");
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting and structure of Gallai colorings", "gallai"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Common common;
  app.add_option("--threads", common.threads, "worker threads (0 = all cores)");
  app.add_option("--seed", common.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--budget", common.budget, "search size limit")
      ->envname("GALLAI_BUDGET")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();
  app.add_option("--format", common.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", common.out, "write output to FILE instead of stdout");
  app.add_flag("--no-timing", common.no_timing, "report 0 seconds for reproducible tables");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "c(n,k)");
  count_cmd->add_option("--n", count.n)->required();
  count_cmd->add_option("--k", count.k, "integer or pow2:e")->required();
  count_cmd->add_option("--method", count.method, "dfs, exact, both or formula")->capture_default_str();
  count_cmd->add_option("--checkpoint", count.checkpoint, "resumable progress file");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "c(n,k) over a grid");
  table_cmd->add_option("--n", table.n, "a..b")->capture_default_str();
  table_cmd->add_option("--k", table.k, "a..b")->capture_default_str();
  table_cmd->add_option("--method", table.method, "dfs, exact or both")->capture_default_str();

  ExtensionArgs ext;
  auto* ext_cmd = app.add_subcommand("extensions", "w(phi,k)");
  ext_cmd->add_option("--input", ext.input)->required();
  ext_cmd->add_option("--k", ext.k)->required();
  ext_cmd->add_flag("--enumerate", ext.enumerate, "list every fan");

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "structure report");
  analyze_cmd->add_option("--input", analyze.input)->required();
  analyze_cmd->add_flag("--json", analyze.json);

  ClassifyArgs classify;
  auto* classify_cmd = app.add_subcommand("classify-all", "class histogram over all Gallai colorings");
  classify_cmd->add_option("--n", classify.n)->required();
  classify_cmd->add_option("--k", classify.k)->required();

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate a bound expression");
  bounds_cmd->add_option("--n", bounds.n)->required();
  bounds_cmd->add_option("--k", bounds.k)->required();
  bounds_cmd->add_option("--m", bounds.m);
  bounds_cmd->add_option("--t", bounds.t);
  bounds_cmd->add_option("--expr", bounds.expr)->required();
  bounds_cmd->add_option("--value", bounds.value, "compare this integer against the bound");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run an inequality suite");
  verify_cmd->add_option("--suite", verify.suite)->required();
  verify_cmd->add_option("--n-min", verify.n_min)->capture_default_str();
  verify_cmd->add_option("--n-max", verify.n_max)->required();
  verify_cmd->add_option("--k-min", verify.k_min)->capture_default_str();
  verify_cmd->add_option("--k-max", verify.k_max)->required();
  verify_cmd->add_option("--samples", verify.samples, "random colorings per cell")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::string output;
    int status = kOk;
    if (*count_cmd) {
      output = run_count(count, common);
    } else if (*table_cmd) {
      output = run_table(table, common);
    } else if (*ext_cmd) {
      output = run_extensions(ext, common);
    } else if (*analyze_cmd) {
      output = run_analyze(analyze, common);
    } else if (*classify_cmd) {
      output = run_classify_all(classify, common);
    } else if (*bounds_cmd) {
      output = run_bounds(bounds, common);
    } else if (*verify_cmd) {
      bool passed = false;
      output = run_verify(verify, common, passed, err);
      status = passed ? kOk : kFailed;
    }
    if (common.out.empty()) {
      out << output;
    } else {
      write_atomically(common.out, output);
    }
    return status;
  } catch (const CallError& e) {
    err << e.what() << "\n";
    return exit_code(e.status);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace gallai_cli

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

#include "gallai/gallai.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <new>
#include <string>

#include <json.hpp>

#include "gallai/bounds.hpp"
#include "gallai/coloring.hpp"
#include "gallai/counting.hpp"
#include "gallai/error.hpp"
#include "gallai/extension.hpp"
#include "gallai/structure.hpp"
#include "gallai/verify.hpp"

struct gallai_coloring {
  gallai::EdgeColoring value;
};

namespace {

using Json = nlohmann::ordered_json;

thread_local std::string last_error;

gallai_status status_of(gallai::ErrorCode code) {
  switch (code) {
    case gallai::ErrorCode::InvalidArgument:
      return GALLAI_INVALID_ARGUMENT;
    case gallai::ErrorCode::Parse:
      return GALLAI_PARSE_ERROR;
    case gallai::ErrorCode::NotGallai:
      return GALLAI_NOT_GALLAI;
    case gallai::ErrorCode::Incomplete:
      return GALLAI_INCOMPLETE;
    case gallai::ErrorCode::BudgetExceeded:
      return GALLAI_BUDGET_EXCEEDED;
    case gallai::ErrorCode::Io:
      return GALLAI_IO_ERROR;
    case gallai::ErrorCode::Internal:
      return GALLAI_INTERNAL_ERROR;
  }
  return GALLAI_INTERNAL_ERROR;
}

template <class Body>
gallai_status guarded(Body&& body) {
  last_error.clear();
  try {
    body();
    return GALLAI_OK;
  } catch (const gallai::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return GALLAI_INTERNAL_ERROR;
}

void require(bool condition, const char* message) {
  if (!condition) gallai::fail(gallai::ErrorCode::InvalidArgument, message);
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

gallai::CountOptions count_options(const gallai_options* options) {
  gallai::CountOptions out;
  if (options == nullptr) return out;
  if (options->budget != 0) out.budget = options->budget;
  out.threads = options->threads;
  if (options->checkpoint != nullptr) out.checkpoint = options->checkpoint;
  return out;
}

gallai::BigCount parse_k(const char* k) {
  require(k != nullptr, "k is required");
  return gallai::parse_count(k);
}

gallai::BoundExpr bound_expr(const char* tag, unsigned n, const char* k, unsigned m, unsigned t) {
  require(tag != nullptr, "expression tag is required");
  gallai::BoundExpr expr;
  expr.tag = gallai::parse_bound_tag(tag);
  expr.n = n;
  expr.k = parse_k(k);
  if (expr.tag == gallai::BoundTag::NonExtremal) expr.m = m;
  if (expr.tag == gallai::BoundTag::NoBigF) expr.t = t;
  return expr;
}

Json vertex_list(gallai::VertexSet set) { return Json(set.members()); }

}  // namespace

extern "C" {

const char* gallai_version(void) { return "1.0.0"; }

const char* gallai_last_error(void) { return last_error.c_str(); }

void gallai_string_free(char* text) { std::free(text); }

void gallai_options_init(gallai_options* options) {
  if (options == nullptr) return;
  options->budget = gallai::kDefaultNodeBudget;
  options->threads = 0;
  options->checkpoint = nullptr;
  options->seed = gallai::VerifyOptions{}.seed;
  options->samples = gallai::VerifyOptions{}.samples;
}

uint64_t gallai_default_budget(void) { return gallai::kDefaultNodeBudget; }

gallai_status gallai_coloring_parse(const char* text, gallai_coloring** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new gallai_coloring{gallai::parse_coloring(text)};
  });
}

gallai_status gallai_coloring_load(const char* path, gallai_coloring** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new gallai_coloring{gallai::load_coloring(path)};
  });
}

gallai_status gallai_coloring_create(unsigned n, uint32_t k, const uint32_t* colors, size_t count,
                                     gallai_coloring** out) {
  return guarded([&] {
    require(out != nullptr && (colors != nullptr || count == 0), "null argument");
    *out = new gallai_coloring{
        gallai::EdgeColoring::from_edge_colors(n, k, std::vector<gallai::ColorId>(colors, colors + count))};
  });
}

void gallai_coloring_free(gallai_coloring* coloring) { delete coloring; }

unsigned gallai_coloring_n(const gallai_coloring* coloring) { return coloring == nullptr ? 0 : coloring->value.n(); }

uint32_t gallai_coloring_k(const gallai_coloring* coloring) { return coloring == nullptr ? 0 : coloring->value.k(); }

gallai_status gallai_coloring_format(const gallai_coloring* coloring, char** out) {
  return guarded([&] {
    require(coloring != nullptr && out != nullptr, "null argument");
    *out = duplicate(gallai::format_coloring(coloring->value));
  });
}

gallai_status gallai_coloring_is_gallai(const gallai_coloring* coloring, int* out, char** triangle) {
  return guarded([&] {
    require(coloring != nullptr && out != nullptr, "null argument");
    const auto rainbow = gallai::rainbow_triangles(coloring->value);
    *out = rainbow.empty() ? 1 : 0;
    if (triangle != nullptr) *triangle = rainbow.empty() ? nullptr : duplicate(gallai::to_string(rainbow.front()));
  });
}

gallai_status gallai_count(unsigned n, const char* k, gallai_method method, const gallai_options* options,
                           char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const gallai::BigCount colors = parse_k(k);
    const gallai::CountOptions opts = count_options(options);
    gallai::BigCount result;
    switch (method) {
      case GALLAI_METHOD_DFS: {
        std::uint64_t small = 0;
        require(gallai::to_u64(colors, small) && small <= 255, "the dfs method needs k <= 255");
        result = gallai::count_gallai_dfs(n, static_cast<unsigned>(small), opts);
        break;
      }
      case GALLAI_METHOD_EXACT:
        result = gallai::count_gallai_via_exact(n, colors, opts);
        break;
      case GALLAI_METHOD_FORMULA: {
        const auto closed = gallai::count_gallai_formula(n, colors);
        require(closed.has_value(), "no closed form for this (n, k)");
        result = *closed;
        break;
      }
      default:
        require(false, "unknown method");
    }
    *out = duplicate(gallai::to_decimal(result));
  });
}

gallai_status gallai_count_exact_colors(unsigned n, unsigned j, const gallai_options* options, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = duplicate(gallai::to_decimal(gallai::count_exact_colors(n, j, count_options(options))));
  });
}

gallai_status gallai_dominance_report(unsigned n, unsigned k, const gallai_options* options, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const gallai::DominanceReport r = gallai::dominance_report(n, k, count_options(options));
    Json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["count"] = gallai::to_decimal(r.count);
    j["two_color_count"] = gallai::to_decimal(r.two_color_count);
    j["ratio_numerator"] = gallai::to_decimal(r.ratio_numerator);
    j["ratio_denominator"] = gallai::to_decimal(r.ratio_denominator);
    *out_json = duplicate(j.dump());
  });
}

gallai_status gallai_classify_all(unsigned n, unsigned k, const gallai_options* options, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    require(n >= 2, "classification needs n >= 2");
    std::map<gallai::MClass, std::uint64_t> histogram;
    const std::uint64_t budget = count_options(options).budget;
    gallai::for_each_gallai(
        n, k, [&](const gallai::EdgeColoring& coloring) { ++histogram[gallai::classify(coloring)]; }, budget);
    Json j = Json::object();
    for (gallai::MClass label : gallai::kAllClasses) j[std::string(gallai::to_string(label))] = histogram[label];
    *out_json = duplicate(j.dump());
  });
}

gallai_status gallai_extensions_count(const gallai_coloring* coloring, const char* k, char** out) {
  return guarded([&] {
    require(coloring != nullptr && out != nullptr, "null argument");
    *out = duplicate(gallai::to_decimal(gallai::count_extensions(coloring->value, parse_k(k))));
  });
}

gallai_status gallai_extensions_enumerate(const gallai_coloring* coloring, uint32_t k, gallai_fan_callback callback,
                                          void* user, uint64_t* delivered) {
  return guarded([&] {
    require(coloring != nullptr && callback != nullptr, "null argument");
    const std::uint64_t count = gallai::enumerate_extensions(
        coloring->value, k,
        [&](std::span<const gallai::ColorId> fan) { return callback(fan.data(), fan.size(), user) != 0; });
    if (delivered != nullptr) *delivered = count;
  });
}

gallai_status gallai_analyze(const gallai_coloring* coloring, char** out_json) {
  return guarded([&] {
    require(coloring != nullptr && out_json != nullptr, "null argument");
    const gallai::StructureReport r = gallai::analyze(coloring->value);
    Json j;
    j["n"] = r.n;
    j["gallai"] = r.gallai;
    j["colors"] = r.colors;
    j["spanning_color"] = r.spanning_color ? Json(*r.spanning_color) : Json(nullptr);
    if (r.max_degree) {
      j["max_color_degree"] = {
          {"vertex", r.max_degree->vertex}, {"color", r.max_degree->color}, {"degree", r.max_degree->degree}};
    } else {
      j["max_color_degree"] = nullptr;
    }
    j["a"] = r.a;
    j["m"] = r.m;
    j["A"] = vertex_list(r.A);
    j["A_prime"] = vertex_list(r.A_prime);
    j["in_F"] = r.in_F;
    j["in_F_prime"] = r.in_F_prime;
    j["nearly_mono"] = r.nearly_mono ? Json(*r.nearly_mono) : Json(nullptr);
    j["class"] = std::string(gallai::to_string(r.label));
    *out_json = duplicate(j.dump());
  });
}

gallai_status gallai_bound_eval(const char* tag, unsigned n, const char* k, unsigned m, unsigned t,
                                char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const gallai::Evaluation e = gallai::eval(bound_expr(tag, n, k, m, t));
    Json j;
    j["expr"] = std::string(gallai::to_string(e.expr.tag));
    j["n"] = e.expr.n;
    j["k"] = gallai::to_decimal(e.expr.k);
    if (e.expr.m) j["m"] = *e.expr.m;
    if (e.expr.t) j["t"] = *e.expr.t;
    j["value"] = e.value.to_string();
    j["exact_integer"] = e.value.is_integer();
    j["floor"] = gallai::to_decimal(e.value.floor());
    j["integer"] = gallai::to_decimal(e.value.integer);
    j["coefficient"] = gallai::to_decimal(e.value.coefficient);
    j["exponent_num"] = e.value.exponent_num;
    j["exponent_den"] = e.value.exponent_den;
    j["hypothesis_met"] = e.hypothesis_met;
    j["note"] = e.note;
    *out_json = duplicate(j.dump());
  });
}

gallai_status gallai_bound_compare(const char* value, const char* tag, unsigned n, const char* k, unsigned m,
                                   unsigned t, int* ordering) {
  return guarded([&] {
    require(value != nullptr && ordering != nullptr, "null argument");
    const auto order = gallai::compare(gallai::parse_count(value), bound_expr(tag, n, k, m, t));
    *ordering = order < 0 ? -1 : order > 0 ? 1 : 0;
  });
}

const char* gallai_suite_names(void) {
  static const std::string names = [] {
    std::string out;
    for (auto name : gallai::suite_names()) {
      if (!out.empty()) out += ' ';
      out += name;
    }
    return out;
  }();
  return names.c_str();
}

gallai_status gallai_verify(const char* suite, unsigned n_min, unsigned n_max, unsigned k_min, unsigned k_max,
                            const gallai_options* options, char** out_json, int* passed) {
  return guarded([&] {
    require(suite != nullptr && out_json != nullptr, "null argument");
    gallai::VerifyOptions opts;
    opts.n_min = n_min;
    opts.n_max = n_max;
    opts.k_min = k_min;
    opts.k_max = k_max;
    if (options != nullptr) {
      if (options->budget != 0) opts.budget = options->budget;
      opts.threads = options->threads;
      opts.seed = options->seed;
      if (options->samples != 0) opts.samples = options->samples;
    }
    const gallai::SuiteReport report = gallai::verify_suite(suite, opts);
    Json j;
    j["suite"] = report.suite;
    j["passed"] = report.passed();
    j["cells"] = Json::array();
    for (const auto& cell : report.cells) {
      Json c;
      c["n"] = cell.n;
      c["k"] = cell.k;
      c["status"] = std::string(gallai::to_string(cell.status));
      c["lhs"] = cell.lhs;
      c["rhs"] = cell.rhs;
      c["detail"] = cell.detail;
      c["witness"] = cell.witness ? Json(*cell.witness) : Json(nullptr);
      j["cells"].push_back(std::move(c));
    }
    *out_json = duplicate(j.dump());
    if (passed != nullptr) *passed = report.passed() ? 1 : 0;
  });
}

}  // extern "C"

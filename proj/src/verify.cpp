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

#include "gallai/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "gallai/bounds.hpp"
#include "gallai/error.hpp"
#include "gallai/extension.hpp"
#include "gallai/structure.hpp"
#include "parallel.hpp"

namespace gallai {

namespace {

struct Cell {
  unsigned n;
  unsigned k;
};

using CellFn = std::function<CellResult(const Cell&, const VerifyOptions&)>;

struct Suite {
  std::string_view name;
  unsigned n_floor;
  unsigned k_floor;
  /// Single k column (0 = the suite ignores k); otherwise the k range.
  std::optional<unsigned> fixed_k;
  CellFn run;
};

CellResult make(const Cell& cell, bool ok) {
  CellResult r;
  r.n = cell.n;
  r.k = cell.k;
  r.status = ok ? CellStatus::Pass : CellStatus::Fail;
  return r;
}

CountOptions single_thread(const VerifyOptions& options) {
  CountOptions out;
  out.budget = options.budget;
  out.threads = 1;
  return out;
}

BigCount bound(BoundTag tag, const Cell& cell) {
  return eval(BoundExpr{tag, cell.n, from_u64(cell.k), std::nullopt, std::nullopt}).value.integer;
}

// Runs `check` on every Gallai coloring of the cell until it returns false;
// the first offender becomes the witness.
CellResult for_all_gallai(const Cell& cell, const VerifyOptions& options,
                          const std::function<bool(const EdgeColoring&, std::string&)>& check) {
  CellResult r = make(cell, true);
  std::uint64_t visited = 0;
  for_each_gallai(
      cell.n, cell.k,
      [&](const EdgeColoring& coloring) {
        ++visited;
        if (r.status == CellStatus::Fail) return;
        std::string why;
        if (!check(coloring, why)) {
          r.status = CellStatus::Fail;
          r.detail = why;
          r.witness = format_coloring(coloring);
        }
      },
      options.budget);
  if (r.status == CellStatus::Pass) r.detail = "colorings=" + std::to_string(visited);
  return r;
}

CellResult mono_ext(const Cell& cell, const VerifyOptions&) {
  const BigCount k = from_u64(cell.k);
  const BigCount got = count_extensions(EdgeColoring::monochromatic(cell.n, cell.k, 1), k);
  const BigCount want = bound(BoundTag::MonoExt, cell);
  CellResult r = make(cell, got == want);
  r.lhs = to_decimal(got);
  r.rhs = to_decimal(want);
  return r;
}

CellResult ext_ceiling(const Cell& cell, const VerifyOptions& options) {
  const BigCount k = from_u64(cell.k);
  const BigCount ceiling = bound(BoundTag::ExtCeiling, cell);
  BigCount best = 0;
  std::uint64_t equal = 0;
  bool all_mono = true;
  CellResult r = for_all_gallai(cell, options, [&](const EdgeColoring& coloring, std::string& why) {
    const BigCount w = count_extensions(coloring, k);
    if (w > best) best = w;
    if (w == ceiling) {
      ++equal;
      all_mono = all_mono && colors_used(coloring).size() <= 1;
    }
    if (w > ceiling) {
      why = "w=" + to_decimal(w) + " exceeds ceiling";
      return false;
    }
    return true;
  });
  r.lhs = to_decimal(best);
  r.rhs = to_decimal(ceiling);
  if (r.status == CellStatus::Pass) {
    r.detail += " equality=" + std::to_string(equal) + " equality_all_monochromatic=" + (all_mono ? "true" : "false");
  }
  return r;
}

CellResult ext_recurrence(const Cell& cell, const VerifyOptions& options) {
  const BigCount k = from_u64(cell.k);
  std::uint64_t pairs = 0;
  CellResult r = for_all_gallai(cell, options, [&](const EdgeColoring& coloring, std::string& why) {
    const BigCount parent = count_extensions(coloring, k);
    bool ok = true;
    enumerate_extensions(coloring, cell.k, [&](std::span<const ColorId> fan) {
      ++pairs;
      const EdgeColoring child = coloring.with_new_vertex(fan);
      const BigCount w = count_extensions(child, k);
      if (w > 2 * parent + (k - 2)) {
        why = "child w=" + to_decimal(w) + " parent w=" + to_decimal(parent);
        ok = false;
      }
      return ok;
    });
    return ok;
  });
  if (r.status == CellStatus::Pass) r.detail += " pairs=" + std::to_string(pairs);
  return r;
}

CellResult recurrence(const Cell& cell, const VerifyOptions& options) {
  const BigCount k = from_u64(cell.k);
  BigCount sum = 0;
  for_each_gallai(
      cell.n, cell.k, [&](const EdgeColoring& coloring) { sum += count_extensions(coloring, k); }, options.budget);
  const BigCount next = count_gallai_dfs(cell.n + 1, cell.k, single_thread(options));
  CellResult r = make(cell, sum == next);
  r.lhs = to_decimal(sum);
  r.rhs = to_decimal(next);
  r.detail = "sum of w over K_" + std::to_string(cell.n) + " vs c(" + std::to_string(cell.n + 1) + "," +
             std::to_string(cell.k) + ")";
  return r;
}

CellResult lower_bound(const Cell& cell, const VerifyOptions& options) {
  const BigCount c = count_gallai_dfs(cell.n, cell.k, single_thread(options));
  const BigCount lo = bound(BoundTag::LowerBound, cell);
  CellResult r = make(cell, c >= lo);
  r.lhs = to_decimal(c);
  r.rhs = to_decimal(lo);
  return r;
}

CellResult trivial_upper(const Cell& cell, const VerifyOptions& options) {
  const BigCount c = count_gallai_dfs(cell.n, cell.k, single_thread(options));
  const BigCount hi = bound(BoundTag::TrivialUpper, cell);
  CellResult r = make(cell, c <= hi);
  r.lhs = to_decimal(c);
  r.rhs = to_decimal(hi);
  return r;
}

CellResult sandwich(const Cell& cell, const VerifyOptions& options) {
  const BigCount c = count_gallai_dfs(cell.n, cell.k, single_thread(options));
  const BigCount lo = bound(BoundTag::LowerBound, cell);
  const BigCount hi = bound(BoundTag::TrivialUpper, cell);
  bool ok = lo <= c && c <= hi;
  if (cell.k == 2) ok = ok && c == pow2(pair_count(cell.n));
  CellResult r = make(cell, ok);
  r.lhs = to_decimal(c);
  r.rhs = "[" + to_decimal(lo) + "," + to_decimal(hi) + "]";
  return r;
}

CellResult color_cap(const Cell& cell, const VerifyOptions& options) {
  const std::vector<BigCount> profile = exact_color_profile(cell.n, single_thread(options));
  unsigned top = 0;
  for (unsigned j = 0; j < profile.size(); ++j) {
    if (profile[j] != 0) top = j;
  }
  CellResult r = make(cell, top < cell.n);
  r.lhs = std::to_string(top);
  r.rhs = std::to_string(cell.n == 1 ? 0 : cell.n - 1);
  r.detail = "largest j with g(n,j) > 0";
  return r;
}

CellResult method_agreement(const Cell& cell, const VerifyOptions& options) {
  const BigCount dfs = count_gallai_dfs(cell.n, cell.k, single_thread(options));
  const BigCount exact = count_gallai_via_exact(cell.n, from_u64(cell.k), single_thread(options));
  bool ok = dfs == exact;
  if (const auto formula = count_gallai_formula(cell.n, from_u64(cell.k))) ok = ok && *formula == dfs;
  CellResult r = make(cell, ok);
  r.lhs = to_decimal(dfs);
  r.rhs = to_decimal(exact);
  return r;
}

CellResult spanning_tree(const Cell& cell, const VerifyOptions& options) {
  return for_all_gallai(cell, options, [](const EdgeColoring& coloring, std::string& why) {
    if (monochromatic_spanning_color(coloring)) return true;
    why = "no monochromatic spanning color";
    return false;
  });
}

CellResult max_degree(const Cell& cell, const VerifyOptions& options) {
  unsigned smallest = cell.n;
  CellResult r = for_all_gallai(cell, options, [&](const EdgeColoring& coloring, std::string& why) {
    const ColorDegree d = max_color_degree(coloring);
    smallest = std::min(smallest, d.degree);
    if (5 * d.degree >= 2 * cell.n) return true;
    why = "max color degree " + std::to_string(d.degree);
    return false;
  });
  r.lhs = std::to_string(smallest);
  r.detail += " min over colorings of the max color degree";
  return r;
}

CellResult f_characterization(const Cell& cell, const VerifyOptions& options) {
  std::uint64_t members = 0;
  CellResult r = for_all_gallai(cell, options, [&](const EdgeColoring& coloring, std::string& why) {
    const bool f = in_F(coloring);
    members += f ? 1 : 0;
    if (f == trichromatic_vertex_free(coloring)) return true;
    why = f ? "in F with a trichromatic vertex" : "trichromatic-vertex free but not in F";
    return false;
  });
  r.lhs = std::to_string(members);
  return r;
}

CellResult classifier_partition(const Cell& cell, const VerifyOptions& options) {
  std::map<MClass, std::uint64_t> histogram;
  CellResult r = for_all_gallai(cell, options, [&](const EdgeColoring& coloring, std::string& why) {
    const StructureReport report = analyze(coloring);
    ++histogram[report.label];
    if ((report.m == cell.n) == (report.colors.size() <= 2)) return true;
    why = "m = n disagrees with the number of colors";
    return false;
  });
  if (r.status != CellStatus::Pass) return r;
  BigCount total = 0;
  std::string detail;
  for (MClass label : kAllClasses) {
    total += from_u64(histogram[label]);
    detail += std::string(detail.empty() ? "" : " ") + std::string(to_string(label)) + "=" +
              std::to_string(histogram[label]);
  }
  const BigCount c = count_gallai_dfs(cell.n, cell.k, single_thread(options));
  const BigCount two = count_at_most_two_colors(cell.n, from_u64(cell.k));
  const bool ok = total == c && from_u64(histogram[MClass::TwoColored]) == two;
  r = make(cell, ok);
  r.lhs = to_decimal(total);
  r.rhs = to_decimal(c);
  r.detail = detail + " expected TwoColored=" + to_decimal(two);
  return r;
}

CellResult f_prime(const Cell& cell, const VerifyOptions& options) {
  const FamilyCounts counts = count_F_families(cell.n, cell.k, options.budget);
  const Evaluation e = eval(BoundExpr{BoundTag::FPrime, cell.n, from_u64(cell.k), std::nullopt, std::nullopt});
  CellResult r = make(cell, compare(counts.f_prime, e.value) != std::strong_ordering::greater);
  r.lhs = to_decimal(counts.f_prime);
  r.rhs = e.value.to_string();
  r.detail = "f=" + to_decimal(counts.f);
  return r;
}

// Uniform 2-colorings of K_n with colors {1, 2} and both classes larger than
// 3mn, by rejection.
EdgeColoring random_two_coloring(std::mt19937_64& rng, unsigned n, unsigned k, unsigned m) {
  const std::size_t edges = pair_count(n);
  const std::uint64_t floor = 3ULL * m * n;
  std::vector<ColorId> colors(edges);
  while (true) {
    std::uint64_t ones = 0;
    for (std::size_t e = 0; e < edges; ++e) {
      colors[e] = 1 + static_cast<ColorId>(rng() >> 63);
      ones += colors[e] == 1 ? 1 : 0;
    }
    if (ones > floor && edges - ones > floor) return EdgeColoring::from_edge_colors(n, k, colors);
  }
}

CellResult non_extremal(const Cell& cell, const VerifyOptions& options) {
  constexpr unsigned m = 1;
  CellResult r = make(cell, true);
  if (pair_count(cell.n) <= 6ULL * m * cell.n + 1) {
    r.status = CellStatus::HypothesisUnmet;
    r.detail = "no 2-coloring has both colors on more than 3mn edges";
    return r;
  }
  const BigCount k = from_u64(cell.k);
  const Evaluation total_bound = eval(BoundExpr{BoundTag::NonExtremal, cell.n, k, m, std::nullopt});
  const ExactValue new_color_bound = non_extremal_new_color_term(cell.n, k, m);
  std::seed_seq seq{options.seed, std::uint64_t{cell.n}, std::uint64_t{cell.k}};
  std::mt19937_64 rng(seq);
  BigCount worst = 0;
  unsigned fewest_triples = ~0U;
  for (unsigned s = 0; s < options.samples && r.status == CellStatus::Pass; ++s) {
    const EdgeColoring coloring = random_two_coloring(rng, cell.n, cell.k, m);
    const ExtensionCounts w = count_extensions_detailed(coloring, k);
    const unsigned triples = static_cast<unsigned>(find_bichromatic_triples(coloring, m).triples.size());
    worst = std::max(worst, w.total);
    fewest_triples = std::min(fewest_triples, triples);
    std::string why;
    if (compare(w.total, total_bound.value) == std::strong_ordering::greater) {
      why = "w=" + to_decimal(w.total) + " exceeds the bound";
    } else if (compare(w.with_new_color, new_color_bound) == std::strong_ordering::greater) {
      why = "third-color extensions " + to_decimal(w.with_new_color) + " exceed the bound";
    } else if (triples < m + 1) {
      why = "only " + std::to_string(triples) + " disjoint bichromatic triples";
    }
    if (!why.empty()) {
      r.status = CellStatus::Fail;
      r.detail = "sample " + std::to_string(s) + ": " + why;
      r.witness = format_coloring(coloring);
    }
  }
  r.lhs = to_decimal(worst);
  r.rhs = total_bound.value.to_string();
  if (r.status == CellStatus::Pass) {
    r.detail = "samples=" + std::to_string(options.samples) + " min_triples=" + std::to_string(fewest_triples);
  }
  return r;
}

CellResult three_color_lower(const Cell& cell, const VerifyOptions& options) {
  const std::vector<BigCount> profile = exact_color_profile(cell.n, single_thread(options));
  const BigCount k = from_u64(cell.k);
  BigCount many = 0;
  for (unsigned j = 3; j < profile.size(); ++j) many += binomial(k, j) * profile[j];
  const BigCount lo = bound(BoundTag::ThreeColorLower, cell);
  CellResult r = make(cell, many >= lo);
  r.lhs = to_decimal(many);
  r.rhs = to_decimal(lo);
  r.detail = "colorings using at least 3 colors";
  return r;
}

CellResult no_big_f(const Cell& cell, const VerifyOptions& options) {
  constexpr unsigned t = 1;
  const BigCount k = from_u64(cell.k);
  const Evaluation e = eval(BoundExpr{BoundTag::NoBigF, cell.n, k, std::nullopt, t});
  const unsigned third = (cell.n + 2) / 3;
  std::uint64_t filtered = 0;
  std::uint64_t above = 0;
  std::optional<std::string> witness;
  BigCount worst = 0;
  for_each_gallai(
      cell.n, cell.k,
      [&](const EdgeColoring& coloring) {
        if (has_F_subset_of_size(coloring, third)) return;
        ++filtered;
        const BigCount w = count_extensions(coloring, k);
        worst = std::max(worst, w);
        if (compare(w, e.value) == std::strong_ordering::greater) {
          ++above;
          if (!witness) witness = format_coloring(coloring);
        }
      },
      options.budget);
  CellResult r = make(cell, above == 0);
  r.lhs = to_decimal(worst);
  r.rhs = e.value.to_string();
  r.detail = "colorings_without_F_subset=" + std::to_string(filtered) + " above_bound=" + std::to_string(above);
  if (!e.hypothesis_met) {
    r.status = CellStatus::HypothesisUnmet;
    r.detail += " (" + e.note + ", recorded only)";
  } else if (above > 0) {
    r.witness = witness;
  }
  return r;
}

CellResult cn_three(const Cell& cell, const VerifyOptions& options) {
  const BigCount c = count_gallai_via_exact(cell.n, 3, single_thread(options));
  const BigCount hi = bound(BoundTag::CnThree, cell);
  CellResult r = make(cell, c <= hi);
  r.lhs = to_decimal(c);
  r.rhs = to_decimal(hi);
  return r;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"mono-ext", 1, 1, std::nullopt, mono_ext},
      {"ext-ceiling", 1, 1, std::nullopt, ext_ceiling},
      {"ext-recurrence", 1, 1, std::nullopt, ext_recurrence},
      {"recurrence", 1, 1, std::nullopt, recurrence},
      {"lower-bound", 2, 1, std::nullopt, lower_bound},
      {"trivial-upper", 1, 2, std::nullopt, trivial_upper},
      {"sandwich", 2, 2, std::nullopt, sandwich},
      {"color-cap", 1, 0, 0U, color_cap},
      {"method-agreement", 1, 1, std::nullopt, method_agreement},
      {"spanning-tree", 2, 1, std::nullopt, spanning_tree},
      {"max-degree", 2, 1, std::nullopt, max_degree},
      {"f-characterization", 1, 1, std::nullopt, f_characterization},
      {"classifier-partition", 2, 1, std::nullopt, classifier_partition},
      {"f-prime", 1, 1, std::nullopt, f_prime},
      {"non-extremal", 2, 2, std::nullopt, non_extremal},
      {"three-color-lower", 2, 1, std::nullopt, three_color_lower},
      {"no-big-f", 1, 1, std::nullopt, no_big_f},
      {"cn-three", 2, 3, 3U, cn_three},
  };
  return all;
}

}  // namespace

std::string_view to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Pass:
      return "pass";
    case CellStatus::Fail:
      return "fail";
    case CellStatus::HypothesisUnmet:
      return "hypothesis-unmet";
  }
  return "unknown";
}

bool SuiteReport::passed() const {
  return std::none_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.status == CellStatus::Fail; });
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

SuiteReport verify_suite(std::string_view name, const VerifyOptions& options) {
  const auto& all = suites();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Suite& s) { return s.name == name; });
  if (it == all.end()) fail(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
  if (options.n_max > 20) fail(ErrorCode::InvalidArgument, "n-max must be at most 20");

  std::vector<Cell> grid;
  for (unsigned n = std::max(options.n_min, it->n_floor); n <= options.n_max; ++n) {
    if (it->fixed_k) {
      grid.push_back({n, *it->fixed_k});
      continue;
    }
    for (unsigned k = std::max(options.k_min, it->k_floor); k <= options.k_max; ++k) grid.push_back({n, k});
  }

  SuiteReport report;
  report.suite = std::string(it->name);
  report.cells.resize(grid.size());
  detail::parallel_for(grid.size(), options.threads,
                       [&](std::size_t i) { report.cells[i] = it->run(grid[i], options); });
  return report;
}

}  // namespace gallai

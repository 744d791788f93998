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

#pragma once

// Exact counts c(n, k) of Gallai colorings of the labelled K_n over k colors.
//
// Two independent routes:
//  * dfs: labelled vertex-by-vertex backtracking over all k colors, pruning a
//    prefix as soon as it contains a rainbow triangle;
//  * exact-color: canonical colorings whose colors first appear in
//    increasing order give g(n, j), the count using exactly the colors [j]
//    (j! labelled colorings per canonical one), and
//    c(n, k) = sum_j C(k, j) g(n, j).
//
// The search tree is cut at a fixed prefix (all colorings of the first few
// vertices). Each prefix is an independent work unit; units may run on any
// number of threads and are combined by addition, and completed units can be
// recorded to a checkpoint file so long counts resume.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gallai/bigcount.hpp"
#include "gallai/coloring.hpp"

namespace gallai {

enum class CountMethod { Dfs, ExactColor, Formula };

std::string_view to_string(CountMethod method);
/// Accepts "dfs", "exact", "exact-color" and "formula".
CountMethod parse_count_method(std::string_view text);

inline constexpr std::uint64_t kDefaultNodeBudget = 5'000'000'000ULL;

struct CountOptions {
  /// Refuse instances whose estimated search size exceeds this.
  std::uint64_t budget = kDefaultNodeBudget;
  /// 0 selects the hardware concurrency.
  unsigned threads = 0;
  /// Empty disables checkpointing.
  std::filesystem::path checkpoint;
  unsigned prefix_vertices = 4;
};

/// Leaf estimate for the labelled search: (k-1)^n 2^C(n,2), from the
/// extension ceiling.
BigCount estimate_dfs_work(unsigned n, unsigned k);
/// Leaf estimate for the canonical search: 1 + sum_j (j-1)^n 2^C(n,2) / j!.
BigCount estimate_exact_work(unsigned n);

BigCount count_gallai_dfs(unsigned n, unsigned k, const CountOptions& options = {});

/// profile[j] = g(n, j) for every j the search can reach (j <= C(n,2));
/// profile[0] is 1 exactly when n = 1.
std::vector<BigCount> exact_color_profile(unsigned n, const CountOptions& options = {});
BigCount count_exact_colors(unsigned n, unsigned j, const CountOptions& options = {});
/// sum_j C(k, j) profile[j].
BigCount combine_profile(std::span<const BigCount> profile, const BigCount& k);
BigCount count_gallai_via_exact(unsigned n, const BigCount& k, const CountOptions& options = {});

/// Closed forms for the degenerate families (n <= 3, k <= 2).
std::optional<BigCount> count_gallai_formula(unsigned n, const BigCount& k);

/// Colorings using at most two of the k colors: C(k,2)(2^C(n,2) - 2) + k.
BigCount count_at_most_two_colors(unsigned n, const BigCount& k);

struct DominanceReport {
  unsigned n;
  unsigned k;
  BigCount count;
  BigCount two_color_count;
  /// count / (C(k,2) 2^C(n,2)) in lowest terms.
  BigCount ratio_numerator;
  BigCount ratio_denominator;
};

DominanceReport dominance_report(unsigned n, unsigned k, const CountOptions& options = {});

/// Visits every Gallai coloring of K_n over [k] in lexicographic edge order,
/// single threaded.
void for_each_gallai(unsigned n, unsigned k, const std::function<void(const EdgeColoring&)>& visit,
                     std::uint64_t budget = kDefaultNodeBudget);

struct CountCell {
  unsigned n;
  BigCount k;
  CountMethod method;
  BigCount count;
  double seconds = 0.0;
};

/// (n, k, method) -> count. Adding a cell whose (n, k) already holds a
/// different count under another method throws.
class CountTable {
 public:
  void add(CountCell cell);
  const std::vector<CountCell>& cells() const { return cells_; }
  std::optional<BigCount> lookup(unsigned n, const BigCount& k, CountMethod method) const;
  bool empty() const { return cells_.empty(); }

 private:
  std::vector<CountCell> cells_;
};

}  // namespace gallai

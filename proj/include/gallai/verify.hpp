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

// Named inequality suites run over an (n, k) grid. Each cell is computed
// independently; cells run in parallel and the report lists them in grid
// order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/counting.hpp"

namespace gallai {

enum class CellStatus { Pass, Fail, HypothesisUnmet };

std::string_view to_string(CellStatus status);

struct CellResult {
  unsigned n = 0;
  unsigned k = 0;
  CellStatus status = CellStatus::Pass;
  /// Decimal strings, or empty when the suite has no single lhs/rhs.
  std::string lhs;
  std::string rhs;
  std::string detail;
  /// Offending coloring in the text file format.
  std::optional<std::string> witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<CellResult> cells;

  /// No cell failed. Cells with unmet hypotheses do not count as failures.
  bool passed() const;
};

struct VerifyOptions {
  unsigned n_min = 1;
  unsigned n_max = 4;
  unsigned k_min = 1;
  unsigned k_max = 4;
  /// 0 selects the hardware concurrency.
  unsigned threads = 0;
  std::uint64_t seed = 20260101;
  /// Random colorings per cell for the randomized suites.
  unsigned samples = 40;
  std::uint64_t budget = kDefaultNodeBudget;
};

const std::vector<std::string_view>& suite_names();

/// Throws InvalidArgument for an unknown suite. Cells below a suite's
/// natural minimum (e.g. k < 2 where the statement needs two colors) are
/// skipped rather than reported.
SuiteReport verify_suite(std::string_view name, const VerifyOptions& options);

}  // namespace gallai

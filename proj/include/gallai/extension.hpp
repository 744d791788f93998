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

// Counting the ways a Gallai coloring of K_n extends by one vertex.
//
// A fan is the list of colors on the n edges from the new vertex to
// 0, 1, ..., n-1. The counters reject non-Gallai input instead of returning 0.

#include <functional>
#include <span>

#include "gallai/bigcount.hpp"
#include "gallai/coloring.hpp"

namespace gallai {

struct ExtensionCounts {
  BigCount total;
  /// Extensions whose fan uses a color absent from the base coloring.
  BigCount with_new_color;
};

/// w(phi, k). Colors the base coloring never uses are interchangeable, so
/// the search tracks them canonically and weights each leaf by a falling
/// factorial; `k` may be astronomically large.
ExtensionCounts count_extensions_detailed(const EdgeColoring& coloring, const BigCount& k);
BigCount count_extensions(const EdgeColoring& coloring, const BigCount& k);

/// Receives each valid fan; return false to stop early.
using FanSink = std::function<bool(std::span<const ColorId>)>;

/// Streams every Gallai fan over colors [1, k] in lexicographic fan order
/// (vertex index, then color). Returns the number of fans delivered.
std::uint64_t enumerate_extensions(const EdgeColoring& coloring, ColorId k, const FanSink& sink);

/// Closed form for a monochromatic base: (k-1) 2^n - (k-2).
BigCount mono_extension_value(unsigned n, const BigCount& k);

struct RecurrenceCheck {
  BigCount parent;
  BigCount child;
  bool holds;
};

/// Counts extensions of `coloring` and of its extension by `fan`, and checks
/// child <= 2 * parent + (k - 2).
RecurrenceCheck check_recurrence(const EdgeColoring& coloring, std::span<const ColorId> fan, ColorId k);

}  // namespace gallai

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

// Structural analysis of Gallai colorings.
//
// F: colorings with a base color c and a vertex partition such that every
//    edge between classes has color c and each class uses c plus at most one
//    private color, distinct across classes. The base color class need not be
//    connected. F contains only Gallai colorings.
// F': members of F in which no set of at least 0.9 n vertices induces at
//    most two colors.
// A(phi): a maximum vertex set inducing a coloring in F; A'(phi): a maximum
//    subset of A(phi) inducing at most two colors. Ties go to the
//    lexicographically smallest set.
//
// Thresholds are compared as cross-multiplied integers:
//   a < n/6       <=>  6a < n
//   m >= n/7      <=>  7m >= n
//   |S| >= 0.9 n  <=>  10|S| >= 9n
//   nearly monochromatic: minority count c with 20c <= m^2 (boundary counts)
//   "more than 3mn" is strict.
//
// Classes, first match wins: TwoColored (m = n), M1 (6a < n),
// M2 (7m >= n, not nearly monochromatic), M3 (7m >= n, nearly
// monochromatic), M4 (otherwise; then 6a >= n and 7m < n).

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gallai/bigcount.hpp"
#include "gallai/coloring.hpp"

namespace gallai {

enum class MClass { TwoColored, M1, M2, M3, M4 };

std::string_view to_string(MClass label);
inline constexpr std::array<MClass, 5> kAllClasses = {MClass::TwoColored, MClass::M1, MClass::M2, MClass::M3,
                                                      MClass::M4};

/// Base color witnessing membership in F, if any (smallest such color).
/// n = 1 is in F with no base color.
std::optional<ColorId> f_base_color(const EdgeColoring& coloring);
bool in_F(const EdgeColoring& coloring);
bool trichromatic_vertex_free(const EdgeColoring& coloring);
/// Requires in_F(coloring).
bool in_F_prime(const EdgeColoring& coloring);

struct FamilyCounts {
  BigCount f;
  BigCount f_prime;
};
/// |F(n,k)| and f'(n,k) by filtering the full Gallai enumeration.
FamilyCounts count_F_families(unsigned n, unsigned k, std::uint64_t budget);
BigCount count_F(unsigned n, unsigned k, std::uint64_t budget);
BigCount count_F_prime(unsigned n, unsigned k, std::uint64_t budget);

/// A(phi).
VertexSet max_F_subset(const EdgeColoring& coloring);
/// A'(phi) for a given A.
VertexSet max_two_colored_subset(const EdgeColoring& coloring, VertexSet within);
/// Whether some `size`-subset induces a coloring in F.
bool has_F_subset_of_size(const EdgeColoring& coloring, unsigned size);

/// The restriction to `subset` (|subset| >= 2, at most two colors) has a
/// color used at most |subset|^2 / 20 times.
bool is_nearly_monochromatic(const EdgeColoring& coloring, VertexSet subset);

struct StructureReport {
  unsigned n = 0;
  bool gallai = false;
  std::vector<ColorId> colors;
  std::optional<ColorId> spanning_color;
  std::optional<ColorDegree> max_degree;
  VertexSet A;
  VertexSet A_prime;
  unsigned a = 0;
  unsigned m = 0;
  bool in_F = false;
  bool in_F_prime = false;
  /// Defined when m >= 2.
  std::optional<bool> nearly_mono;
  MClass label = MClass::TwoColored;
};

/// Requires a complete Gallai coloring.
StructureReport analyze(const EdgeColoring& coloring);
MClass classify(const EdgeColoring& coloring);

struct BichromaticTriple {
  Vertex r;
  Vertex u;
  Vertex b;
};

struct TriplePacking {
  std::vector<BichromaticTriple> triples;
  ColorId red = 0;
  ColorId blue = 0;
};

/// Greedy packing of disjoint triples with color(u,r) = red and
/// color(u,b) = blue, centers scanned in index order. Stops at target + 1
/// triples; otherwise the packing is maximal, so if both colors appear more
/// than 3 * target * n times it reaches target + 1. Red is the smaller color.
TriplePacking find_bichromatic_triples(const EdgeColoring& coloring, unsigned target);

struct RainbowClaw {
  Vertex center;
  std::array<Vertex, 3> leaves;
  std::array<ColorId, 3> colors;
};

struct RainbowClawPacking {
  std::vector<RainbowClaw> claws;
  VertexSet host;
  /// Host vertices left uncovered when fewer than `target` claws were found.
  VertexSet residual;
};

/// Greedy vertex-disjoint rainbow K_{1,3} packing inside `host`, which must
/// lie in one color neighborhood of `center`. When the packing falls short
/// of `target` no residual vertex sees three colors inside the residual set.
RainbowClawPacking find_rainbow_claw_packing(const EdgeColoring& coloring, Vertex center, VertexSet host,
                                             unsigned target);

}  // namespace gallai

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

// Edge colorings of complete graphs K_n and the basic rainbow-triangle
// predicates.
//
// Edges are indexed in lexicographic order grouped by the larger endpoint:
// {0,1}, {0,2}, {1,2}, {0,3}, {1,3}, {2,3}, ... so that growing K_j to
// K_{j+1} appends one contiguous block of j edges.

#include <bit>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gallai {

using Vertex = unsigned;

/// Color symbol in [1, k]. Zero marks an unassigned edge in partial colorings.
using ColorId = std::uint32_t;

inline constexpr unsigned kMaxVertices = 64;

constexpr std::size_t edge_index(Vertex u, Vertex v) {
  return static_cast<std::size_t>(v) * (v - 1) / 2 + u;  // requires u < v
}

/// Subset of [0, n) for n <= 64, one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet range(unsigned n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Vertex> members() const;
  /// "{0,2,5}"
  std::string to_string() const;

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct EdgeAssignment {
  Vertex u;
  Vertex v;
  ColorId color;
};

class EdgeColoring {
 public:
  /// Validating constructor. Pairs may be given in either orientation and in
  /// any order; missing pairs leave the coloring partial.
  static EdgeColoring create(unsigned n, ColorId k, std::span<const EdgeAssignment> assignments);

  /// `colors` lists every edge in lexicographic edge order.
  static EdgeColoring from_edge_colors(unsigned n, ColorId k, std::vector<ColorId> colors);

  static EdgeColoring monochromatic(unsigned n, ColorId k, ColorId color);

  unsigned n() const { return n_; }
  ColorId k() const { return k_; }
  std::size_t edge_count() const { return colors_.size(); }
  bool complete() const { return assigned_ == colors_.size(); }

  /// Color of {u, v}; 0 when unassigned.
  ColorId color(Vertex u, Vertex v) const {
    return u < v ? colors_[edge_index(u, v)] : colors_[edge_index(v, u)];
  }
  std::span<const ColorId> edge_colors() const { return colors_; }

  /// Induced coloring on `subset`, vertices relabelled in increasing order.
  EdgeColoring restricted(VertexSet subset) const;

  /// The coloring of K_{n+1} whose new vertex n joins vertex i with fan[i].
  EdgeColoring with_new_vertex(std::span<const ColorId> fan) const;

  /// Same edges under another color budget; must cover every used color.
  EdgeColoring with_budget(ColorId k) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  EdgeColoring(unsigned n, ColorId k, std::vector<ColorId> colors);

  unsigned n_ = 0;
  ColorId k_ = 1;
  std::vector<ColorId> colors_;
  std::size_t assigned_ = 0;
};

/// Per-vertex, per-color adjacency bitsets over the colors a complete
/// coloring actually uses. Colors are addressed by dense index.
class ColorClasses {
 public:
  explicit ColorClasses(const EdgeColoring& coloring);

  unsigned n() const { return n_; }
  /// Used colors in increasing order; dense index i refers to colors()[i].
  std::span<const ColorId> colors() const { return colors_; }
  std::size_t color_count() const { return colors_.size(); }
  /// Dense index of `color`, or -1 when the coloring never uses it.
  int dense(ColorId color) const;

  std::uint64_t neighbors(Vertex v, std::size_t dense_color) const {
    return adjacency_[v * colors_.size() + dense_color];
  }
  std::size_t dense_color_of(Vertex u, Vertex v) const;

  /// Number of distinct colors on edges inside `subset`, stopping at `limit`.
  unsigned colors_inside(VertexSet subset, unsigned limit) const;
  /// Number of edges of `dense_color` inside `subset`.
  unsigned edges_inside(VertexSet subset, std::size_t dense_color) const;

 private:
  unsigned n_;
  std::vector<ColorId> colors_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::uint32_t> edge_dense_;
};

struct Triangle {
  Vertex a;
  Vertex b;
  Vertex c;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// All rainbow triangles in lexicographic order. Requires a complete coloring.
std::vector<Triangle> rainbow_triangles(const EdgeColoring& coloring);

bool is_gallai(const EdgeColoring& coloring);

/// Throws NotGallai naming the first rainbow triangle.
void require_gallai(const EdgeColoring& coloring);

/// Whether adding a vertex joined by `fan` keeps the coloring Gallai. Only
/// triangles through the new vertex are examined; the caller guarantees the
/// base coloring is Gallai.
bool is_gallai_with_new_vertex(const EdgeColoring& coloring, std::span<const ColorId> fan);

std::vector<ColorId> colors_used(const EdgeColoring& coloring);

/// Smallest color whose class is a connected spanning subgraph. None for n = 1
/// (no edges) and whenever no class connects all vertices.
std::optional<ColorId> monochromatic_spanning_color(const EdgeColoring& coloring);

struct ColorDegree {
  Vertex vertex;
  ColorId color;
  unsigned degree;
  friend bool operator==(const ColorDegree&, const ColorDegree&) = default;
};

/// Maximum color degree, ties to the smallest (vertex, color). Requires n >= 2.
ColorDegree max_color_degree(const EdgeColoring& coloring);

/// Text format: first line `n k`, then one `u v c` line per edge.
EdgeColoring parse_coloring(std::string_view text);
EdgeColoring load_coloring(const std::filesystem::path& path);
/// Writes edges in lexicographic order. Requires a complete coloring.
std::string format_coloring(const EdgeColoring& coloring);

std::string to_string(const Triangle& t);

}  // namespace gallai

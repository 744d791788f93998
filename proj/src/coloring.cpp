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

#include "gallai/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gallai/bigcount.hpp"
#include "gallai/error.hpp"

namespace gallai {

namespace {

void check_dimensions(unsigned n, ColorId k) {
  if (n < 1 || n > kMaxVertices) {
    fail(ErrorCode::InvalidArgument,
         "vertex count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxVertices) + "]");
  }
  if (k < 1) fail(ErrorCode::InvalidArgument, "color budget must be at least 1");
}

std::string pair_text(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

// Returns an empty string when the entry is acceptable.
std::string entry_problem(unsigned n, ColorId k, const EdgeAssignment& e,
                          const std::vector<ColorId>& colors) {
  if (e.u >= n || e.v >= n) {
    return "vertex out of range in " + pair_text(e.u, e.v) + " (n=" + std::to_string(n) + ")";
  }
  if (e.u == e.v) return "self-loop " + pair_text(e.u, e.v) + " is not an edge";
  if (e.color < 1 || e.color > k) {
    return "color out of range: " + std::to_string(e.color) + " on " +
           pair_text(std::min(e.u, e.v), std::max(e.u, e.v)) + " (k=" + std::to_string(k) + ")";
  }
  const Vertex lo = std::min(e.u, e.v);
  const Vertex hi = std::max(e.u, e.v);
  if (colors[edge_index(lo, hi)] != 0) return "duplicate edge " + pair_text(lo, hi);
  return {};
}

}  // namespace

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(rest)));
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : members()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

EdgeColoring::EdgeColoring(unsigned n, ColorId k, std::vector<ColorId> colors)
    : n_(n), k_(k), colors_(std::move(colors)) {
  assigned_ = static_cast<std::size_t>(std::count_if(colors_.begin(), colors_.end(),
                                                     [](ColorId c) { return c != 0; }));
}

EdgeColoring EdgeColoring::create(unsigned n, ColorId k, std::span<const EdgeAssignment> assignments) {
  check_dimensions(n, k);
  std::vector<ColorId> colors(pair_count(n), 0);
  for (const EdgeAssignment& e : assignments) {
    if (std::string problem = entry_problem(n, k, e, colors); !problem.empty()) {
      fail(ErrorCode::InvalidArgument, problem);
    }
    colors[edge_index(std::min(e.u, e.v), std::max(e.u, e.v))] = e.color;
  }
  return EdgeColoring(n, k, std::move(colors));
}

EdgeColoring EdgeColoring::from_edge_colors(unsigned n, ColorId k, std::vector<ColorId> colors) {
  check_dimensions(n, k);
  if (colors.size() != pair_count(n)) {
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(pair_count(n)) +
                                         " edge colors, got " + std::to_string(colors.size()));
  }
  for (ColorId c : colors) {
    if (c > k) fail(ErrorCode::InvalidArgument, "color out of range: " + std::to_string(c));
  }
  return EdgeColoring(n, k, std::move(colors));
}

EdgeColoring EdgeColoring::monochromatic(unsigned n, ColorId k, ColorId color) {
  return from_edge_colors(n, k, std::vector<ColorId>(pair_count(n), color));
}

EdgeColoring EdgeColoring::restricted(VertexSet subset) const {
  const std::vector<Vertex> keep = subset.members();
  if (keep.empty() || keep.back() >= n_) {
    fail(ErrorCode::InvalidArgument, "restriction set " + subset.to_string() + " invalid for n=" +
                                         std::to_string(n_));
  }
  std::vector<ColorId> colors;
  colors.reserve(pair_count(keep.size()));
  for (std::size_t j = 1; j < keep.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) colors.push_back(color(keep[i], keep[j]));
  }
  return EdgeColoring(static_cast<unsigned>(keep.size()), k_, std::move(colors));
}

EdgeColoring EdgeColoring::with_new_vertex(std::span<const ColorId> fan) const {
  if (fan.size() != n_) {
    fail(ErrorCode::InvalidArgument, "fan has " + std::to_string(fan.size()) +
                                         " colors, expected " + std::to_string(n_));
  }
  if (n_ + 1 > kMaxVertices) fail(ErrorCode::InvalidArgument, "vertex limit reached");
  std::vector<ColorId> colors = colors_;
  for (ColorId c : fan) {
    if (c < 1 || c > k_) fail(ErrorCode::InvalidArgument, "fan color out of range: " + std::to_string(c));
    colors.push_back(c);
  }
  return EdgeColoring(n_ + 1, k_, std::move(colors));
}

EdgeColoring EdgeColoring::with_budget(ColorId k) const {
  if (k < 1) fail(ErrorCode::InvalidArgument, "color budget must be at least 1");
  for (ColorId c : colors_) {
    if (c > k) {
      fail(ErrorCode::InvalidArgument, "color budget " + std::to_string(k) +
                                           " is below used color " + std::to_string(c));
    }
  }
  return EdgeColoring(n_, k, colors_);
}

ColorClasses::ColorClasses(const EdgeColoring& coloring) : n_(coloring.n()) {
  if (!coloring.complete()) fail(ErrorCode::Incomplete, "coloring is incomplete");
  colors_ = colors_used(coloring);
  adjacency_.assign(static_cast<std::size_t>(n_) * colors_.size(), 0);
  edge_dense_.resize(coloring.edge_count());
  for (Vertex v = 1; v < n_; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      const auto d = static_cast<std::size_t>(dense(coloring.color(u, v)));
      edge_dense_[edge_index(u, v)] = static_cast<std::uint32_t>(d);
      adjacency_[u * colors_.size() + d] |= std::uint64_t{1} << v;
      adjacency_[v * colors_.size() + d] |= std::uint64_t{1} << u;
    }
  }
}

int ColorClasses::dense(ColorId color) const {
  auto it = std::lower_bound(colors_.begin(), colors_.end(), color);
  if (it == colors_.end() || *it != color) return -1;
  return static_cast<int>(it - colors_.begin());
}

std::size_t ColorClasses::dense_color_of(Vertex u, Vertex v) const {
  return u < v ? edge_dense_[edge_index(u, v)] : edge_dense_[edge_index(v, u)];
}

unsigned ColorClasses::colors_inside(VertexSet subset, unsigned limit) const {
  unsigned found = 0;
  const std::uint64_t bits = subset.bits();
  for (std::size_t c = 0; c < colors_.size() && found < limit; ++c) {
    for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
      if (neighbors(static_cast<Vertex>(std::countr_zero(rest)), c) & bits) {
        ++found;
        break;
      }
    }
  }
  return found;
}

unsigned ColorClasses::edges_inside(VertexSet subset, std::size_t dense_color) const {
  unsigned twice = 0;
  const std::uint64_t bits = subset.bits();
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1) {
    twice += std::popcount(neighbors(static_cast<Vertex>(std::countr_zero(rest)), dense_color) & bits);
  }
  return twice / 2;
}

std::vector<Triangle> rainbow_triangles(const EdgeColoring& coloring) {
  if (!coloring.complete()) fail(ErrorCode::Incomplete, "coloring is incomplete");
  std::vector<Triangle> out;
  const unsigned n = coloring.n();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const ColorId ab = coloring.color(a, b);
      for (Vertex c = b + 1; c < n; ++c) {
        const ColorId ac = coloring.color(a, c);
        const ColorId bc = coloring.color(b, c);
        if (ab != ac && ab != bc && ac != bc) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

bool is_gallai(const EdgeColoring& coloring) {
  if (!coloring.complete()) fail(ErrorCode::Incomplete, "coloring is incomplete");
  const unsigned n = coloring.n();
  for (Vertex c = 2; c < n; ++c) {
    for (Vertex b = 1; b < c; ++b) {
      const ColorId bc = coloring.color(b, c);
      for (Vertex a = 0; a < b; ++a) {
        const ColorId ab = coloring.color(a, b);
        const ColorId ac = coloring.color(a, c);
        if (ab != ac && ab != bc && ac != bc) return false;
      }
    }
  }
  return true;
}

void require_gallai(const EdgeColoring& coloring) {
  const auto rainbow = rainbow_triangles(coloring);
  if (!rainbow.empty()) {
    fail(ErrorCode::NotGallai, "not a Gallai coloring: rainbow triangle " + to_string(rainbow.front()));
  }
}

bool is_gallai_with_new_vertex(const EdgeColoring& coloring, std::span<const ColorId> fan) {
  if (!coloring.complete()) fail(ErrorCode::Incomplete, "coloring is incomplete");
  if (fan.size() != coloring.n()) {
    fail(ErrorCode::InvalidArgument, "fan has " + std::to_string(fan.size()) +
                                         " colors, expected " + std::to_string(coloring.n()));
  }
  for (ColorId c : fan) {
    if (c < 1) fail(ErrorCode::InvalidArgument, "fan color out of range: 0");
  }
  for (Vertex j = 1; j < fan.size(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      const ColorId old = coloring.color(i, j);
      if (fan[i] != fan[j] && fan[i] != old && fan[j] != old) return false;
    }
  }
  return true;
}

std::vector<ColorId> colors_used(const EdgeColoring& coloring) {
  std::vector<ColorId> out;
  for (ColorId c : coloring.edge_colors()) {
    if (c != 0) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<ColorId> monochromatic_spanning_color(const EdgeColoring& coloring) {
  const ColorClasses classes(coloring);
  const unsigned n = coloring.n();
  if (n < 2) return std::nullopt;
  const std::uint64_t all = VertexSet::range(n).bits();
  for (std::size_t c = 0; c < classes.color_count(); ++c) {
    std::uint64_t reached = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
        next |= classes.neighbors(static_cast<Vertex>(std::countr_zero(rest)), c);
      }
      frontier = next & ~reached;
      reached |= next;
    }
    if (reached == all) return classes.colors()[c];
  }
  return std::nullopt;
}

ColorDegree max_color_degree(const EdgeColoring& coloring) {
  if (coloring.n() < 2) fail(ErrorCode::InvalidArgument, "max color degree needs n >= 2");
  const ColorClasses classes(coloring);
  ColorDegree best{0, classes.colors()[0], 0};
  for (Vertex v = 0; v < coloring.n(); ++v) {
    for (std::size_t c = 0; c < classes.color_count(); ++c) {
      const auto degree = static_cast<unsigned>(std::popcount(classes.neighbors(v, c)));
      if (degree > best.degree) best = {v, classes.colors()[c], degree};
    }
  }
  return best;
}

namespace {

bool parse_uint(std::string_view token, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return !token.empty() && ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
  fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + message);
}

}  // namespace

EdgeColoring parse_coloring(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  unsigned n = 0;
  ColorId k = 0;
  std::vector<ColorId> colors;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    std::uint64_t values[3] = {0, 0, 0};
    const std::size_t expected = have_header ? 3 : 2;
    if (tokens.size() != expected) {
      parse_fail(line_no, "expected " + std::to_string(expected) + " integers, found " +
                              std::to_string(tokens.size()) + " fields");
    }
    for (std::size_t i = 0; i < expected; ++i) {
      if (!parse_uint(tokens[i], values[i])) {
        parse_fail(line_no, "malformed integer '" + std::string(tokens[i]) + "'");
      }
    }
    if (!have_header) {
      if (values[0] < 1 || values[0] > kMaxVertices) {
        parse_fail(line_no, "vertex count " + std::to_string(values[0]) + " outside [1, 64]");
      }
      if (values[1] < 1 || values[1] > UINT32_MAX) parse_fail(line_no, "color budget must be in [1, 2^32)");
      n = static_cast<unsigned>(values[0]);
      k = static_cast<ColorId>(values[1]);
      colors.assign(pair_count(n), 0);
      have_header = true;
      continue;
    }
    if (values[2] > UINT32_MAX) parse_fail(line_no, "color out of range: " + std::string(tokens[2]));
    if (values[0] >= n || values[1] >= n) {
      parse_fail(line_no, "vertex out of range in " + pair_text(static_cast<Vertex>(values[0]),
                                                                 static_cast<Vertex>(values[1])));
    }
    const EdgeAssignment e{static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]),
                           static_cast<ColorId>(values[2])};
    if (e.u >= e.v) parse_fail(line_no, "edge " + pair_text(e.u, e.v) + " must satisfy u < v");
    if (std::string problem = entry_problem(n, k, e, colors); !problem.empty()) {
      parse_fail(line_no, problem);
    }
    colors[edge_index(e.u, e.v)] = e.color;
  }
  if (!have_header) fail(ErrorCode::Parse, "line 1: missing `n k` header");
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (colors[edge_index(u, v)] == 0) {
        fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": missing edge " + pair_text(u, v));
      }
    }
  }
  return EdgeColoring::from_edge_colors(n, k, std::move(colors));
}

EdgeColoring load_coloring(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "read error on " + path.string());
  try {
    return parse_coloring(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string format_coloring(const EdgeColoring& coloring) {
  if (!coloring.complete()) fail(ErrorCode::Incomplete, "cannot write an incomplete coloring");
  std::string out = std::to_string(coloring.n()) + " " + std::to_string(coloring.k()) + "\n";
  for (Vertex u = 0; u < coloring.n(); ++u) {
    for (Vertex v = u + 1; v < coloring.n(); ++v) {
      out += std::to_string(u) + " " + std::to_string(v) + " " +
             std::to_string(coloring.color(u, v)) + "\n";
    }
  }
  return out;
}

std::string to_string(const Triangle& t) {
  return "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "}";
}

}  // namespace gallai

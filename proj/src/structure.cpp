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

#include "gallai/structure.hpp"

#include <algorithm>

#include "gallai/counting.hpp"
#include "gallai/error.hpp"

namespace gallai {

std::string_view to_string(MClass label) {
  switch (label) {
    case MClass::TwoColored:
      return "TwoColored";
    case MClass::M1:
      return "M1";
    case MClass::M2:
      return "M2";
    case MClass::M3:
      return "M3";
    case MClass::M4:
      return "M4";
  }
  return "unknown";
}

namespace {

Vertex lowest(std::uint64_t bits) { return static_cast<Vertex>(std::countr_zero(bits)); }

// Dense base color making the coloring induced on `subset` a member of F.
// For each candidate base c the non-c edges split `subset` into connected
// components; every component must carry a single non-c color. Components
// sharing a private color merge into one class, so that suffices.
std::optional<std::size_t> base_color_on(const ColorClasses& classes, VertexSet subset) {
  const std::uint64_t s = subset.bits();
  for (std::size_t c = 0; c < classes.color_count(); ++c) {
    bool inside = false;
    for (std::uint64_t rest = s; rest != 0 && !inside; rest &= rest - 1) {
      inside = (classes.neighbors(lowest(rest), c) & s) != 0;
    }
    if (!inside) continue;

    bool ok = true;
    std::uint64_t unvisited = s;
    while (unvisited != 0 && ok) {
      std::uint64_t component = unvisited & (~unvisited + 1);
      std::uint64_t frontier = component;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
          const Vertex v = lowest(rest);
          next |= s & ~(std::uint64_t{1} << v) & ~classes.neighbors(v, c);
        }
        frontier = next & ~component;
        component |= next;
      }
      unvisited &= ~component;
      unsigned private_colors = 0;
      for (std::size_t a = 0; a < classes.color_count() && private_colors <= 1; ++a) {
        if (a == c) continue;
        for (std::uint64_t rest = component; rest != 0; rest &= rest - 1) {
          if (classes.neighbors(lowest(rest), a) & component) {
            ++private_colors;
            break;
          }
        }
      }
      ok = private_colors <= 1;
    }
    if (ok) return c;
  }
  return std::nullopt;
}

bool in_F_on(const ColorClasses& classes, VertexSet subset) {
  return subset.size() <= 1 || base_color_on(classes, subset).has_value();
}

// Visits the `size`-subsets of `pool` in lexicographic order until `visit`
// returns true; returns the accepted subset.
template <class Visit>
std::optional<VertexSet> first_subset(VertexSet pool, unsigned size, const Visit& visit) {
  const std::vector<Vertex> items = pool.members();
  const std::size_t total = items.size();
  if (size > total) return std::nullopt;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    VertexSet candidate;
    for (std::size_t i : idx) candidate.insert(items[i]);
    if (visit(candidate)) return candidate;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == total - size + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VertexSet max_F_subset_on(const ColorClasses& classes) {
  const VertexSet all = VertexSet::range(classes.n());
  for (unsigned s = classes.n(); s >= 1; --s) {
    if (auto hit = first_subset(all, s, [&](VertexSet set) { return in_F_on(classes, set); })) return *hit;
  }
  return VertexSet(1);
}

VertexSet max_two_colored_on(const ColorClasses& classes, VertexSet within) {
  for (unsigned s = within.size(); s >= 1; --s) {
    if (auto hit = first_subset(within, s, [&](VertexSet set) { return classes.colors_inside(set, 3) <= 2; })) {
      return *hit;
    }
  }
  return within;
}

bool in_F_prime_on(const ColorClasses& classes) {
  const unsigned n = classes.n();
  // Subsets of a two-colored set stay two-colored, so only the smallest
  // qualifying size needs checking.
  const unsigned smallest = (9 * n + 9) / 10;
  const auto witness = first_subset(VertexSet::range(n), smallest,
                                    [&](VertexSet set) { return classes.colors_inside(set, 3) <= 2; });
  return !witness.has_value();
}

bool nearly_mono_on(const ColorClasses& classes, VertexSet subset) {
  const unsigned m = subset.size();
  if (m < 2) fail(ErrorCode::InvalidArgument, "nearly-monochromatic test needs at least 2 vertices");
  std::vector<unsigned> counts;
  for (std::size_t c = 0; c < classes.color_count(); ++c) {
    const unsigned edges = classes.edges_inside(subset, c);
    if (edges > 0) counts.push_back(edges);
  }
  if (counts.size() > 2) {
    fail(ErrorCode::InvalidArgument, "set " + subset.to_string() + " induces more than two colors");
  }
  const unsigned minority = counts.size() == 2 ? std::min(counts[0], counts[1]) : 0;
  return 20ULL * minority <= std::uint64_t{m} * m;
}

}  // namespace

std::optional<ColorId> f_base_color(const EdgeColoring& coloring) {
  const ColorClasses classes(coloring);
  const auto base = base_color_on(classes, VertexSet::range(coloring.n()));
  if (!base) return std::nullopt;
  return classes.colors()[*base];
}

bool in_F(const EdgeColoring& coloring) {
  const ColorClasses classes(coloring);
  return in_F_on(classes, VertexSet::range(coloring.n()));
}

bool trichromatic_vertex_free(const EdgeColoring& coloring) {
  const ColorClasses classes(coloring);
  for (Vertex v = 0; v < coloring.n(); ++v) {
    unsigned seen = 0;
    for (std::size_t c = 0; c < classes.color_count(); ++c) seen += classes.neighbors(v, c) != 0 ? 1 : 0;
    if (seen > 2) return false;
  }
  return true;
}

bool in_F_prime(const EdgeColoring& coloring) {
  const ColorClasses classes(coloring);
  if (!in_F_on(classes, VertexSet::range(coloring.n()))) {
    fail(ErrorCode::InvalidArgument, "coloring is not in F");
  }
  return in_F_prime_on(classes);
}

FamilyCounts count_F_families(unsigned n, unsigned k, std::uint64_t budget) {
  FamilyCounts out{0, 0};
  std::uint64_t f = 0;
  std::uint64_t f_prime = 0;
  for_each_gallai(
      n, k,
      [&](const EdgeColoring& coloring) {
        const ColorClasses classes(coloring);
        if (!in_F_on(classes, VertexSet::range(n))) return;
        ++f;
        if (in_F_prime_on(classes)) ++f_prime;
      },
      budget);
  out.f = from_u64(f);
  out.f_prime = from_u64(f_prime);
  return out;
}

BigCount count_F(unsigned n, unsigned k, std::uint64_t budget) { return count_F_families(n, k, budget).f; }

BigCount count_F_prime(unsigned n, unsigned k, std::uint64_t budget) {
  return count_F_families(n, k, budget).f_prime;
}

VertexSet max_F_subset(const EdgeColoring& coloring) { return max_F_subset_on(ColorClasses(coloring)); }

VertexSet max_two_colored_subset(const EdgeColoring& coloring, VertexSet within) {
  if (within.empty() || !within.subset_of(VertexSet::range(coloring.n()))) {
    fail(ErrorCode::InvalidArgument, "invalid vertex set " + within.to_string());
  }
  return max_two_colored_on(ColorClasses(coloring), within);
}

bool has_F_subset_of_size(const EdgeColoring& coloring, unsigned size) {
  const ColorClasses classes(coloring);
  if (size <= 1) return size <= coloring.n();
  return first_subset(VertexSet::range(coloring.n()), size,
                      [&](VertexSet set) { return in_F_on(classes, set); })
      .has_value();
}

bool is_nearly_monochromatic(const EdgeColoring& coloring, VertexSet subset) {
  if (!subset.subset_of(VertexSet::range(coloring.n()))) {
    fail(ErrorCode::InvalidArgument, "invalid vertex set " + subset.to_string());
  }
  return nearly_mono_on(ColorClasses(coloring), subset);
}

StructureReport analyze(const EdgeColoring& coloring) {
  if (!coloring.complete()) fail(ErrorCode::Incomplete, "coloring is incomplete");
  require_gallai(coloring);
  const unsigned n = coloring.n();
  const ColorClasses classes(coloring);
  const VertexSet all = VertexSet::range(n);

  StructureReport report;
  report.n = n;
  report.gallai = true;
  report.colors.assign(classes.colors().begin(), classes.colors().end());
  report.spanning_color = monochromatic_spanning_color(coloring);
  if (n >= 2) report.max_degree = max_color_degree(coloring);
  report.in_F = in_F_on(classes, all);
  report.in_F_prime = report.in_F && in_F_prime_on(classes);
  report.A = max_F_subset_on(classes);
  report.A_prime = max_two_colored_on(classes, report.A);
  report.a = report.A.size();
  report.m = report.A_prime.size();
  if (report.m >= 2) report.nearly_mono = nearly_mono_on(classes, report.A_prime);

  if (report.m == n) {
    report.label = MClass::TwoColored;
  } else if (6 * report.a < n) {
    report.label = MClass::M1;
  } else if (7 * report.m >= n) {
    report.label = report.nearly_mono.value_or(true) ? MClass::M3 : MClass::M2;
  } else {
    report.label = MClass::M4;
  }
  if ((report.m == n) != (report.colors.size() <= 2) || !report.A_prime.subset_of(report.A) ||
      (report.in_F && report.a != n) ||
      (report.label == MClass::M4 && !(6 * report.a >= n && 7 * report.m <= n))) {
    fail(ErrorCode::Internal, "structure report invariant violated");
  }
  return report;
}

MClass classify(const EdgeColoring& coloring) { return analyze(coloring).label; }

TriplePacking find_bichromatic_triples(const EdgeColoring& coloring, unsigned target) {
  const ColorClasses classes(coloring);
  if (classes.color_count() > 2) fail(ErrorCode::InvalidArgument, "not a 2-coloring: uses more than two colors");
  TriplePacking packing;
  if (classes.color_count() < 2) {
    if (classes.color_count() == 1) packing.red = classes.colors()[0];
    return packing;
  }
  packing.red = classes.colors()[0];
  packing.blue = classes.colors()[1];
  std::uint64_t free = VertexSet::range(coloring.n()).bits();
  for (Vertex u = 0; u < coloring.n() && packing.triples.size() <= target; ++u) {
    if (!((free >> u) & 1U)) continue;
    const std::uint64_t reds = classes.neighbors(u, 0) & free;
    const std::uint64_t blues = classes.neighbors(u, 1) & free;
    if (reds == 0 || blues == 0) continue;
    const Vertex r = lowest(reds);
    const Vertex b = lowest(blues);
    packing.triples.push_back({r, u, b});
    free &= ~((std::uint64_t{1} << u) | (std::uint64_t{1} << r) | (std::uint64_t{1} << b));
  }
  return packing;
}

RainbowClawPacking find_rainbow_claw_packing(const EdgeColoring& coloring, Vertex center, VertexSet host,
                                             unsigned target) {
  require_gallai(coloring);
  const unsigned n = coloring.n();
  if (center >= n || !host.subset_of(VertexSet::range(n)) || host.contains(center)) {
    fail(ErrorCode::InvalidArgument, "malformed host " + host.to_string() + " for center " + std::to_string(center));
  }
  const auto members = host.members();
  for (Vertex h : members) {
    if (coloring.color(center, h) != coloring.color(center, members.front())) {
      fail(ErrorCode::InvalidArgument, "malformed host: " + host.to_string() +
                                           " is not inside one color neighborhood of " + std::to_string(center));
    }
  }

  RainbowClawPacking packing{{}, host, host};
  std::uint64_t available = host.bits();
  while (packing.claws.size() < target) {
    bool found = false;
    for (std::uint64_t rest = available; rest != 0 && !found; rest &= rest - 1) {
      const Vertex x = lowest(rest);
      RainbowClaw claw{x, {}, {}};
      unsigned taken = 0;
      for (std::uint64_t others = available & ~(std::uint64_t{1} << x); others != 0 && taken < 3;
           others &= others - 1) {
        const Vertex y = lowest(others);
        const ColorId c = coloring.color(x, y);
        if (std::find(claw.colors.begin(), claw.colors.begin() + taken, c) != claw.colors.begin() + taken) continue;
        claw.leaves[taken] = y;
        claw.colors[taken] = c;
        ++taken;
      }
      if (taken == 3) {
        packing.claws.push_back(claw);
        available &= ~(std::uint64_t{1} << x);
        for (Vertex y : claw.leaves) available &= ~(std::uint64_t{1} << y);
        found = true;
      }
    }
    if (!found) break;
  }
  packing.residual = VertexSet(available);
  return packing;
}

}  // namespace gallai

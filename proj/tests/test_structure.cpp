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

#include <doctest.h>

#include <map>
#include <random>

#include "gallai/counting.hpp"
#include "gallai/error.hpp"
#include "gallai/structure.hpp"
#include "oracle.hpp"

using namespace gallai;

namespace {

EdgeColoring make(unsigned n, ColorId k, std::vector<EdgeAssignment> edges) {
  return EdgeColoring::create(n, k, edges);
}

VertexSet set_of(const std::vector<unsigned>& vs) {
  VertexSet s;
  for (unsigned v : vs) s.insert(v);
  return s;
}

// Block coloring: `block[v]` names v's class, inner edges take
// `inner[class]`, edges between classes take `base`.
oracle::Matrix blocks(const std::vector<unsigned>& block, const std::vector<unsigned>& inner, unsigned base) {
  oracle::Matrix m(static_cast<unsigned>(block.size()));
  for (unsigned u = 0; u < m.n; ++u)
    for (unsigned v = u + 1; v < m.n; ++v) m.set(u, v, block[u] == block[v] ? inner[block[u]] : base);
  return m;
}

oracle::Matrix random_gallai(std::mt19937_64& rng, unsigned n, unsigned k) {
  oracle::Matrix m(1);
  while (m.n < n) {
    std::vector<unsigned> fan(m.n);
    oracle::Matrix next;
    do {
      for (auto& c : fan) c = 1 + static_cast<unsigned>(rng() % k);
      next = oracle::extend(m, fan);
    } while (!oracle::gallai(next));
    m = next;
  }
  return m;
}

std::size_t colors_inside(const oracle::Matrix& m, const std::vector<unsigned>& set) {
  return oracle::colors_of(oracle::restrict_to(m, set)).size();
}

}  // namespace

TEST_CASE("F membership examples") {
  CHECK(in_F(EdgeColoring::monochromatic(5, 3, 2)));
  CHECK(in_F(EdgeColoring::monochromatic(1, 3, 1)));
  CHECK(in_F(make(2, 3, {{0, 1, 3}})));
  // vertex 0 sees colors 1, 2 and 3; the rest is Gallai
  const auto tri = make(4, 3, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  CHECK_FALSE(trichromatic_vertex_free(tri));
  CHECK_FALSE(in_F(tri));
  CHECK(trichromatic_vertex_free(make(3, 3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}})));
  // two classes {0,1}, {2,3} with private colors 2, 3 over base 1, base disconnected inside
  const auto two_classes = oracle::to_coloring(blocks({0, 0, 1, 1}, {2, 3}, 1), 3);
  CHECK(in_F(two_classes));
  CHECK(f_base_color(two_classes) == 1U);
}

TEST_CASE("every 2-coloring is in F, n <= 5") {
  for (unsigned n = 1; n <= 5; ++n) {
    oracle::all_colorings(n, 2, [](const oracle::Matrix& m) { CHECK(in_F(oracle::to_coloring(m, 2))); });
  }
}

TEST_CASE("F membership matches the partition definition on all colorings, n <= 4, k <= 3") {
  for (unsigned n = 1; n <= 4; ++n) {
    oracle::all_colorings(n, 3, [](const oracle::Matrix& m) {
      const auto phi = oracle::to_coloring(m, 3);
      const bool f = in_F(phi);
      CHECK(f == oracle::in_F(m));
      if (f) CHECK(trichromatic_vertex_free(phi));
      CHECK(trichromatic_vertex_free(phi) == oracle::trichromatic_free(m));
    });
  }
}

TEST_CASE("on Gallai colorings F is exactly the trichromatic-vertex-free set, n <= 5, k <= 3") {
  for (unsigned n = 1; n <= 5; ++n) {
    oracle::all_gallai(n, 3, [](const oracle::Matrix& m) {
      const auto phi = oracle::to_coloring(m, 3);
      CHECK(in_F(phi) == trichromatic_vertex_free(phi));
      CHECK(in_F(phi) == oracle::in_F(m));
    });
  }
}

TEST_CASE("F' membership") {
  CHECK_FALSE(in_F_prime(EdgeColoring::monochromatic(6, 2, 1)));
  const auto k10 = blocks({0, 0, 0, 0, 1, 1, 1, 2, 2, 2}, {1, 2, 3}, 4);
  bool oracle_prime = true;
  for (unsigned drop = 0; drop <= 10; ++drop) {
    std::vector<unsigned> keep;
    for (unsigned v = 0; v < 10; ++v)
      if (v != drop) keep.push_back(v);
    if (colors_inside(k10, keep) <= 2) oracle_prime = false;
  }
  CHECK(oracle_prime);
  CHECK(in_F_prime(oracle::to_coloring(k10, 4)) == oracle_prime);

  const auto tri = make(4, 3, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  CHECK_THROWS_AS(in_F_prime(tri), Error);
}

TEST_CASE("F and F' counts") {
  for (unsigned k = 1; k <= 4; ++k) CHECK(count_F(2, k, kDefaultNodeBudget) == k);
  for (unsigned n = 1; n <= 5; ++n) CHECK(count_F_prime(n, 2, kDefaultNodeBudget) == 0);
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned k = 1; k <= 4; ++k) {
      std::uint64_t f = 0;
      std::uint64_t f_prime = 0;
      oracle::all_gallai(n, k, [&](const oracle::Matrix& m) {
        if (!oracle::in_F(m)) return;
        ++f;
        const auto small = oracle::best_subset((1ULL << n) - 1, [&](const std::vector<unsigned>& s) {
          return colors_inside(m, s) <= 2;
        });
        if (10 * small.size() < 9 * n) ++f_prime;
      });
      const FamilyCounts counts = count_F_families(n, k, kDefaultNodeBudget);
      CHECK(counts.f == from_u64(f));
      CHECK(counts.f_prime == from_u64(f_prime));
    }
  }
}

TEST_CASE("A and A' match the subset oracle") {
  auto check_one = [](const oracle::Matrix& m, unsigned k) {
    const auto phi = oracle::to_coloring(m, k);
    const std::uint64_t all = (1ULL << m.n) - 1;
    const auto a = oracle::best_subset(all, [&](const std::vector<unsigned>& s) {
      return oracle::in_F(oracle::restrict_to(m, s));
    });
    std::uint64_t a_mask = 0;
    for (unsigned v : a) a_mask |= 1ULL << v;
    const auto a_prime =
        oracle::best_subset(a_mask, [&](const std::vector<unsigned>& s) { return colors_inside(m, s) <= 2; });
    const VertexSet got_a = max_F_subset(phi);
    CHECK(got_a == set_of(a));
    CHECK(max_two_colored_subset(phi, got_a) == set_of(a_prime));
    CHECK(has_F_subset_of_size(phi, static_cast<unsigned>(a.size())));
    if (a.size() < m.n) CHECK_FALSE(has_F_subset_of_size(phi, static_cast<unsigned>(a.size() + 1)));
  };
  for (unsigned n = 2; n <= 4; ++n) oracle::all_gallai(n, 3, [&](const oracle::Matrix& m) { check_one(m, 3); });
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) check_one(random_gallai(rng, 5 + trial % 3, 4), 4);
}

TEST_CASE("nearly monochromatic threshold") {
  // K_10 with `count` edges in the second color
  auto with_minority = [](unsigned count) {
    std::vector<ColorId> colors(pair_count(10), 1);
    unsigned placed = 0;
    for (Vertex v = 1; v < 10 && placed < count; ++v) {
      for (Vertex u = 0; u < v && placed < count; ++u) {
        colors[edge_index(u, v)] = 2;
        ++placed;
      }
    }
    return EdgeColoring::from_edge_colors(10, 2, colors);
  };
  const VertexSet all = VertexSet::range(10);
  CHECK(is_nearly_monochromatic(with_minority(0), all));
  CHECK(is_nearly_monochromatic(with_minority(5), all));
  CHECK_FALSE(is_nearly_monochromatic(with_minority(6), all));
  const auto three = make(3, 3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}});
  CHECK_THROWS_AS(is_nearly_monochromatic(three, VertexSet::range(3)), Error);
}

TEST_CASE("classification") {
  const auto mono = analyze(EdgeColoring::monochromatic(5, 3, 2));
  CHECK(mono.label == MClass::TwoColored);
  CHECK(mono.a == 5);
  CHECK(mono.m == 5);
  CHECK(mono.in_F);
  CHECK_FALSE(mono.in_F_prime);
  CHECK(mono.nearly_mono == true);

  CHECK_THROWS_AS(analyze(make(3, 3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}})), Error);

  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned k = 1; k <= 3; ++k) {
      std::map<MClass, std::uint64_t> histogram;
      for_each_gallai(n, k, [&](const EdgeColoring& phi) {
        const StructureReport r = analyze(phi);
        ++histogram[r.label];
        CHECK((r.m == n) == (r.colors.size() <= 2));
        CHECK(r.A_prime.subset_of(r.A));
        CHECK(r.m <= r.a);
        if (r.in_F) CHECK(r.a == n);
        if (r.colors.size() <= 2) CHECK(r.label == MClass::TwoColored);
      });
      std::uint64_t total = 0;
      for (const auto& [label, count] : histogram) total += count;
      CHECK(from_u64(total) == count_gallai_dfs(n, k));
      CHECK(from_u64(histogram[MClass::TwoColored]) == count_at_most_two_colors(n, k));
    }
  }
}

TEST_CASE("class labels follow the thresholds on larger colorings") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 7 + static_cast<unsigned>(rng() % 4);
    const auto phi = oracle::to_coloring(random_gallai(rng, n, 4), 4);
    const StructureReport r = analyze(phi);
    switch (r.label) {
      case MClass::TwoColored:
        CHECK(r.m == n);
        break;
      case MClass::M1:
        CHECK(6 * r.a < n);
        break;
      case MClass::M2:
        CHECK(7 * r.m >= n);
        CHECK(r.nearly_mono == false);
        break;
      case MClass::M3:
        CHECK(7 * r.m >= n);
        CHECK(r.nearly_mono == true);
        break;
      case MClass::M4:
        CHECK(6 * r.a >= n);
        CHECK(7 * r.m <= n);
        break;
    }
    CHECK(classify(phi) == r.label);
  }
}

TEST_CASE("bichromatic triples") {
  CHECK(find_bichromatic_triples(EdgeColoring::monochromatic(6, 2, 1), 3).triples.empty());
  const auto k4 = make(4, 2, {{0, 1, 1}, {2, 3, 1}, {0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}});
  CHECK(find_bichromatic_triples(k4, 3).triples.size() == 1);
  CHECK_THROWS_AS(find_bichromatic_triples(make(3, 3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}), 1), Error);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 14 + static_cast<unsigned>(rng() % 7);
    const unsigned target = 1 + static_cast<unsigned>(rng() % 2);
    std::vector<ColorId> colors(pair_count(n));
    std::uint64_t red = 0;
    for (auto& c : colors) {
      c = 1 + static_cast<ColorId>(rng() >> 63);
      red += c == 1;
    }
    const std::uint64_t blue = colors.size() - red;
    const auto phi = EdgeColoring::from_edge_colors(n, 2, colors);
    const TriplePacking p = find_bichromatic_triples(phi, target);
    VertexSet used;
    for (const auto& t : p.triples) {
      CHECK(phi.color(t.u, t.r) == p.red);
      CHECK(phi.color(t.u, t.b) == p.blue);
      for (Vertex v : {t.r, t.u, t.b}) {
        CHECK_FALSE(used.contains(v));
        used.insert(v);
      }
    }
    CHECK(p.triples.size() <= target + 1);
    if (red > 3ULL * target * n && blue > 3ULL * target * n) CHECK(p.triples.size() >= target + 1);
  }
}

TEST_CASE("rainbow claw packing") {
  // host inducing a 2-coloring: nothing to pack
  const auto two = oracle::to_coloring(blocks({0, 1, 1, 1, 1}, {3, 2}, 1), 3);
  VertexSet host = set_of({1, 2, 3, 4});
  const auto empty = find_rainbow_claw_packing(two, 0, host, 2);
  CHECK(empty.claws.empty());
  CHECK(empty.residual == host);
  CHECK(in_F(two.restricted(empty.residual)));

  // center 0 joined by color 4 to a host where vertex 1 sees colors 1, 2, 3
  oracle::Matrix m(5);
  for (unsigned v = 1; v < 5; ++v) m.set(0, v, 4);
  m.set(1, 2, 1);
  m.set(1, 3, 2);
  m.set(1, 4, 3);
  m.set(2, 3, 1);
  m.set(2, 4, 1);
  m.set(3, 4, 2);
  const auto witness = oracle::to_coloring(m, 4);
  REQUIRE(oracle::gallai(m));
  const auto one = find_rainbow_claw_packing(witness, 0, host, 2);
  REQUIRE(one.claws.size() == 1);
  CHECK(one.claws[0].center == 1);

  CHECK_THROWS_AS(find_rainbow_claw_packing(witness, 0, set_of({0, 1}), 1), Error);
  CHECK_THROWS_AS(find_rainbow_claw_packing(two, 1, set_of({0, 2}), 1), Error);
}

TEST_CASE("claw packing residual lies in F on random Gallai K_8 neighborhoods") {
  std::mt19937_64 rng(51);
  int checked = 0;
  while (checked < 1000) {
    const auto m = random_gallai(rng, 8, 4);
    const auto phi = oracle::to_coloring(m, 4);
    const Vertex center = static_cast<Vertex>(rng() % 8);
    const ColorId color = phi.color(center, (center + 1) % 8);
    VertexSet host;
    for (Vertex v = 0; v < 8; ++v)
      if (v != center && phi.color(center, v) == color) host.insert(v);
    const unsigned target = 1 + static_cast<unsigned>(rng() % 2);
    const auto p = find_rainbow_claw_packing(phi, center, host, target);
    VertexSet used;
    for (const auto& claw : p.claws) {
      CHECK(host.contains(claw.center));
      CHECK_FALSE(used.contains(claw.center));
      used.insert(claw.center);
      for (int i = 0; i < 3; ++i) {
        CHECK(host.contains(claw.leaves[i]));
        CHECK_FALSE(used.contains(claw.leaves[i]));
        used.insert(claw.leaves[i]);
        CHECK(phi.color(claw.center, claw.leaves[i]) == claw.colors[i]);
      }
      CHECK(oracle::rainbow(claw.colors[0], claw.colors[1], claw.colors[2]));
    }
    if (p.claws.size() < target) {
      CHECK(p.residual == VertexSet(host.bits() & ~used.bits()));
      if (!p.residual.empty()) CHECK(in_F(phi.restricted(p.residual)));
    }
    ++checked;
  }
}

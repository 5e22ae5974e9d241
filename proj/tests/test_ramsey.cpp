/*
 * Copyright 2026 The monopath Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include "monopath/enumgen.hpp"
#include "monopath/error.hpp"
#include "monopath/ramsey.hpp"
#include "monopath/reach.hpp"

using namespace monopath;

namespace {

SimpleGraph graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
  return SimpleGraph::from_edges(n, edges);
}

// Induced copy of H anywhere in G, by trying every injective placement.
bool has_induced_copy(const SimpleGraph& g, const SimpleGraph& h) {
  const auto n = g.order(), m = h.order();
  if (m > n) return false;
  std::vector<Vertex> place;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> bool {
    const auto depth = place.size();
    if (depth == m) return true;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i)
        ok = h.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(depth)) == g.adjacent(place[i], v);
      if (!ok) continue;
      used[v] = 1;
      place.push_back(v);
      if (self(self)) return true;
      place.pop_back();
      used[v] = 0;
    }
    return false;
  };
  return rec(rec);
}

}  // namespace

TEST_CASE("build_t on the 5-cycle") {
  const auto p = build_t(SimpleGraph::cycle(5));
  const std::vector<std::pair<Vertex, Vertex>> expected{{0, 1}, {0, 4}, {1, 2}, {2, 0}, {2, 3},
                                                        {3, 0}, {3, 1}, {3, 4}, {4, 1}, {4, 2}};
  CHECK(p.arcs() == expected);
}

TEST_CASE("build_t small cases") {
  CHECK(build_t(graph(2, {})).arcs() == std::vector<std::pair<Vertex, Vertex>>{{1, 0}});
  CHECK(build_t(graph(3, {{0, 1}})).arcs() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 0}, {2, 1}});
}

TEST_CASE("build_t forward arcs are exactly the edges") {
  Rng rng(Seed{41});
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng.below(15), rng.unit(), rng);
    const auto p = build_t(g);
    for (Vertex i = 0; i < g.order(); ++i)
      for (Vertex j = i + 1; j < g.order(); ++j) {
        CHECK(p.has_arc(i, j) != p.has_arc(j, i));
        CHECK(p.has_arc(i, j) == g.adjacent(i, j));
      }
  }
}

TEST_CASE("has_mono_induced_motif examples") {
  const auto c5 = SimpleGraph::cycle(5);
  CHECK(has_mono_induced_motif(c5, EdgeColouring(5, 0), c5));
  // Edge order is 01, 04, 12, 23, 34.
  CHECK_FALSE(has_mono_induced_motif(c5, EdgeColouring{1, 0, 0, 0, 0}, c5));
  CHECK_FALSE(has_mono_induced_motif(SimpleGraph::cycle(6), EdgeColouring(6, 0), c5));
  CHECK_THROWS_AS(has_mono_induced_motif(c5, EdgeColouring(4, 0), c5), ColouringIncomplete);
}

TEST_CASE("inducedness: a 5-cycle with a chord has no induced 5-cycle") {
  auto chorded = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  CHECK_FALSE(has_mono_induced_motif(chorded, EdgeColouring(6, 0), SimpleGraph::cycle(5)));
}

TEST_CASE("ramsey_check examples") {
  const auto c5 = SimpleGraph::cycle(5);
  CHECK(ramsey_check(c5, 1, c5).holds);

  const auto two = ramsey_check(c5, 2, c5);
  REQUIRE_FALSE(two.holds);
  CHECK(two.witness == EdgeColouring{0, 0, 0, 0, 1});
  CHECK_FALSE(has_mono_induced_motif(c5, *two.witness, c5));

  const auto c6 = ramsey_check(SimpleGraph::cycle(6), 1, c5);
  REQUIRE_FALSE(c6.holds);
  CHECK(c6.witness == EdgeColouring(6, 0));
}

TEST_CASE("single colouring reduces to induced subgraph search") {
  Rng rng(Seed{42});
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng.below(9), rng.unit(), rng);
    const auto h = random_graph(1 + rng.below(4), rng.unit(), rng);
    CHECK(ramsey_check(g, 1, h).holds == has_induced_copy(g, h));
  }
}

TEST_CASE("ramsey witnesses re-fail and are worker-count independent") {
  Rng rng(Seed{43});
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(4 + rng.below(4), 0.6, rng);
    if (g.edges().size() > 12) continue;
    const auto h = random_graph(3, 0.7, rng);
    const auto one = ramsey_check(g, 2, h, default_budget(), 1);
    const auto many = ramsey_check(g, 2, h, default_budget(), 3);
    CHECK(one.holds == many.holds);
    CHECK(one.witness == many.witness);
    if (!one.holds) CHECK_FALSE(has_mono_induced_motif(g, *one.witness, h));
  }
}

TEST_CASE("ramsey_check budget") {
  const auto c6 = SimpleGraph::cycle(6);
  CHECK_THROWS_AS(ramsey_check(c6, 3, SimpleGraph::cycle(5), 10), BudgetExceeded);
}

TEST_CASE("quasi-monochromatic triangle check examples") {
  const auto t1 = build_t(SimpleGraph::cycle(5));
  CHECK(check_quasi_mono_c3_all_colourings(t1, 1).holds);

  std::vector<std::uint8_t> transitive{0, 0, 0};
  const auto none = check_quasi_mono_c3_all_colourings(PatternTournament::from_orientation(3, transitive), 1);
  REQUIRE_FALSE(none.holds);
  CHECK(none.witness == EdgeColouring{0, 0, 0});

  // 0->1, 1->2, 2->0.
  std::vector<std::uint8_t> cyclic{0, 1, 0};
  CHECK(check_quasi_mono_c3_all_colourings(PatternTournament::from_orientation(3, cyclic), 2).holds);
  const auto three = check_quasi_mono_c3_all_colourings(PatternTournament::from_orientation(3, cyclic), 3);
  REQUIRE_FALSE(three.holds);
  CHECK(quasi_mono_triangles(colour_pattern(PatternTournament::from_orientation(3, cyclic), 3, *three.witness))
            .empty());
}

TEST_CASE("triangle check agrees with triangle enumeration") {
  Rng rng(Seed{44});
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_pattern(3 + rng.below(3), rng);
    const Colour k = static_cast<Colour>(2 + rng.below(2));
    if (pair_count(p.order()) > 10) continue;
    const auto verdict = check_quasi_mono_c3_all_colourings(p, k);
    bool all = true;
    for_each_colouring(p.as_tournament(), k, true,
                       [&](const ColouredTournament& t) { all = all && !quasi_mono_triangles(t).empty(); });
    CHECK(verdict.holds == all);
    if (!verdict.holds) CHECK(quasi_mono_triangles(colour_pattern(p, k, *verdict.witness)).empty());
  }
}

TEST_CASE("every orientation of an odd cycle has a directed two-path") {
  for (unsigned bits = 0; bits < 32; ++bits) {
    std::vector<std::uint8_t> o(5);
    for (int i = 0; i < 5; ++i) o[i] = (bits >> i) & 1U;
    CHECK(cycle_has_directed_two_path(o));
  }
  // An alternating even cycle has none.
  std::vector<std::uint8_t> alternating{0, 1, 0, 1, 0, 1};
  CHECK_FALSE(cycle_has_directed_two_path(alternating));
}

TEST_CASE("serialize_colouring") {
  const auto c5 = SimpleGraph::cycle(5);
  CHECK(serialize_colouring(c5, {0, 0, 0, 0, 1}) == "0 1 0\n0 4 0\n1 2 0\n2 3 0\n3 4 1\n");
}

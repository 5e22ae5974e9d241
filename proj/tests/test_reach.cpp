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
#include "monopath/reach.hpp"
#include "oracles.hpp"

using namespace monopath;

TEST_CASE("mono_reach_within examples") {
  const auto mono = oracle::mono_c3();
  const auto rainbow = oracle::rainbow_c3();
  for (Vertex v = 0; v < 3; ++v) CHECK(mono_reach_within(rainbow, v, v, 0));
  CHECK(mono_reach_within(mono, 0, 2, 2));
  CHECK_FALSE(mono_reach_within(mono, 0, 2, 1));
  CHECK_FALSE(mono_reach_within(rainbow, 1, 0, 2));
  CHECK_FALSE(mono_reach_within(rainbow, 1, 0, 100));
  CHECK_THROWS_AS(mono_reach_within(mono, 0, 3, 2), VertexOutOfRange);
}

TEST_CASE("mono_reach_any examples") {
  const auto mono = oracle::mono_c3();
  const auto rainbow = oracle::rainbow_c3();
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v) CHECK(mono_reach_any(mono, u, v));
  CHECK_FALSE(mono_reach_any(rainbow, 1, 0));
  CHECK(mono_reach_any(rainbow, 1, 1));
}

TEST_CASE("bounded reachability matches path enumeration for n <= 8") {
  Rng rng(Seed{11});
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = 1 + rng.below(8);
    const auto k = static_cast<Colour>(1 + rng.below(3));
    const auto t = random_instance(n, k, rng);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        for (std::size_t len = 0; len <= 5; ++len)
          REQUIRE(mono_reach_within(t, u, v, len) == oracle::path_exists(t, u, v, len));
        REQUIRE(mono_reach_any(t, u, v) == oracle::reaches(t, u, v));
        const auto set2 = mono_reach_set(t, u, 2);
        const auto coset2 = mono_coreach_set(t, u, 2);
        REQUIRE(set2.contains(v) == oracle::path_exists(t, u, v, 2));
        REQUIRE(coset2.contains(v) == oracle::path_exists(t, v, u, 2));
        REQUIRE(mono_reach_set(t, u).contains(v) == oracle::reaches(t, u, v));
      }
  }
}

TEST_CASE("reachability is monotone in the length bound") {
  Rng rng(Seed{12});
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = 2 + rng.below(20);
    const auto t = random_instance(n, static_cast<Colour>(1 + rng.below(4)), rng);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        for (std::size_t len = 0; len < 4; ++len)
          if (mono_reach_within(t, u, v, len)) CHECK(mono_reach_within(t, u, v, len + 1));
        if (mono_reach_within(t, u, v, 4)) CHECK(mono_reach_any(t, u, v));
        if (t.has_arc(u, v)) CHECK(mono_reach_within(t, u, v, 1));
      }
  }
}

TEST_CASE("forbidding_edges examples") {
  CHECK(forbidding_edges(oracle::mono_c3()).empty());
  const auto all = forbidding_edges(oracle::rainbow_transitive()).arcs();
  CHECK(all == std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {1, 2}});
  const auto single = forbidding_edges(parse_cdt("cdt 2 1\n0 1 0")).arcs();
  CHECK(single == std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
}

TEST_CASE("forbidding_edges matches the definition") {
  Rng rng(Seed{13});
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = rng.below(9);
    const auto t = random_instance(n, static_cast<Colour>(1 + rng.below(3)), rng);
    const auto f = forbidding_edges(t);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        const bool expected = t.has_arc(u, v) && !oracle::path_exists(t, v, u, 2);
        CHECK(f.contains(u, v) == expected);
        CHECK(is_forbidding(t, u, v) == expected);
      }
  }
}

TEST_CASE("forbidding arcs stay forbidding in subtournaments") {
  Rng rng(Seed{14});
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = 2 + rng.below(39);
    const auto t = random_instance(n, static_cast<Colour>(1 + rng.below(5)), rng);
    const auto f = forbidding_edges(t);
    std::vector<Vertex> w;
    for (Vertex v = 0; v < n; ++v)
      if (rng.coin()) w.push_back(v);
    const auto sub = induced_sub(t, w);
    const auto fs = forbidding_edges(sub.tournament);
    for (Vertex i = 0; i < sub.map.size(); ++i)
      for (Vertex j = 0; j < sub.map.size(); ++j)
        if (f.contains(sub.map[i], sub.map[j])) CHECK(fs.contains(i, j));
  }
}

TEST_CASE("quasi_mono_triangles examples") {
  CHECK(quasi_mono_triangles(oracle::rainbow_c3()).empty());

  const auto mono = quasi_mono_triangles(oracle::mono_c3());
  REQUIRE(mono.size() == 1);
  CHECK(mono[0].cycle == std::array<Vertex, 3>{0, 1, 2});
  CHECK_FALSE(mono[0].distinguished.has_value());

  const auto odd = quasi_mono_triangles(parse_cdt("cdt 3 2\n0 1 0\n1 2 0\n2 0 1\n"));
  REQUIRE(odd.size() == 1);
  CHECK(odd[0].distinguished == std::pair<Vertex, Vertex>{2, 0});

  // Rotation: the cycle 0->2->1->0 is reported starting at 0.
  const auto rotated = quasi_mono_triangles(parse_cdt("cdt 3 1\n0 2 0\n2 1 0\n1 0 0\n"));
  REQUIRE(rotated.size() == 1);
  CHECK(rotated[0].cycle == std::array<Vertex, 3>{0, 2, 1});
}

TEST_CASE("triangles are exactly the quasi-monochromatic directed 3-cycles") {
  Rng rng(Seed{15});
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = rng.below(10);
    const auto t = random_instance(n, static_cast<Colour>(1 + rng.below(4)), rng);
    std::vector<std::array<Vertex, 3>> expected;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = a + 1; c < n; ++c) {
          if (b == c || !t.has_arc(a, b) || !t.has_arc(b, c) || !t.has_arc(c, a)) continue;
          const auto x = *t.arc_colour(a, b), y = *t.arc_colour(b, c), z = *t.arc_colour(c, a);
          if (x == y || y == z || x == z) expected.push_back({a, b, c});
        }
    const auto found = quasi_mono_triangles(t);
    REQUIRE(found.size() == expected.size());
    for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].cycle == expected[i]);
  }
}

TEST_CASE("triangle arcs and forbidding arcs") {
  Rng rng(Seed{16});
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = 3 + rng.below(20);
    const auto t = random_instance(n, static_cast<Colour>(1 + rng.below(3)), rng);
    const auto f = forbidding_edges(t);
    for (const auto& tri : quasi_mono_triangles(t)) {
      const auto [a, b, c] = tri.cycle;
      if (!tri.distinguished) {
        CHECK_FALSE(f.contains(a, b));
        CHECK_FALSE(f.contains(b, c));
        CHECK_FALSE(f.contains(c, a));
      } else {
        CHECK_FALSE(f.contains(tri.distinguished->first, tri.distinguished->second));
      }
    }
  }
}

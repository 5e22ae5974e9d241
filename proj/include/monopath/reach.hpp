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

#ifndef MONOPATH_REACH_HPP
#define MONOPATH_REACH_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "monopath/model.hpp"

namespace monopath {

// Paths are simple and all arcs share one colour. The empty path (length 0)
// counts as monochromatic, so every vertex reaches itself.

/// Is there a monochromatic path of at most `max_len` arcs from u to v?
bool mono_reach_within(const ColouredTournament& t, Vertex u, Vertex v, std::size_t max_len);

/// Is there a monochromatic path of any length from u to v?
bool mono_reach_any(const ColouredTournament& t, Vertex u, Vertex v);

/// Vertices reachable from u by a monochromatic path of at most `max_len` arcs.
VertexSet mono_reach_set(const ColouredTournament& t, Vertex u, std::size_t max_len);
/// Vertices that reach v by a monochromatic path of at most `max_len` arcs.
VertexSet mono_coreach_set(const ColouredTournament& t, Vertex v, std::size_t max_len);

/// Unbounded variants.
VertexSet mono_reach_set(const ColouredTournament& t, Vertex u);
VertexSet mono_coreach_set(const ColouredTournament& t, Vertex v);

/// A set of arcs of one host tournament, stored as an adjacency bitmatrix.
class ArcSet {
 public:
  ArcSet() = default;
  explicit ArcSet(std::size_t n) : out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

  std::size_t order() const { return out_.size(); }
  void insert(Vertex u, Vertex v) {
    out_[u].insert(v);
    in_[v].insert(u);
  }
  bool contains(Vertex u, Vertex v) const { return out_[u].contains(v); }

  /// Heads of member arcs leaving u.
  const VertexSet& out(Vertex u) const { return out_[u]; }
  /// Tails of member arcs entering v.
  const VertexSet& in(Vertex v) const { return in_[v]; }

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  /// Members in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  std::vector<VertexSet> out_, in_;
};

/// Arcs u->v with no monochromatic path of length at most two from v to u.
ArcSet forbidding_edges(const ColouredTournament& t);

bool is_forbidding(const ColouredTournament& t, Vertex u, Vertex v);

/// Directed triangle a->b->c->a with at least two arcs of one colour.
struct QuasiMonoTriangle {
  std::array<Vertex, 3> cycle;
  /// The arc whose colour differs from the other two; empty if monochromatic.
  std::optional<std::pair<Vertex, Vertex>> distinguished;

  friend bool operator==(const QuasiMonoTriangle&, const QuasiMonoTriangle&) = default;
};

/// Every quasi-monochromatic directed triangle once, rotated to start at its
/// smallest vertex, ordered lexicographically by (a, b, c).
std::vector<QuasiMonoTriangle> quasi_mono_triangles(const ColouredTournament& t);

/// Classifies the directed triangle a->b->c->a (arcs must exist).
std::optional<QuasiMonoTriangle> classify_triangle(const ColouredTournament& t, Vertex a, Vertex b,
                                                   Vertex c);

}  // namespace monopath

#endif  // MONOPATH_REACH_HPP

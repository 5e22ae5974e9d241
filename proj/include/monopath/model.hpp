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

#ifndef MONOPATH_MODEL_HPP
#define MONOPATH_MODEL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monopath/vertex_set.hpp"

namespace monopath {

using Colour = std::uint32_t;

struct Arc {
  Vertex from;
  Vertex to;
  Colour colour;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Index of the unordered pair {u, v} (u < v) in lexicographic pair order.
constexpr std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v) {
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// All pairs (u, v) with u < v in lexicographic order.
std::vector<std::pair<Vertex, Vertex>> lex_pairs(std::size_t n);

/// Complete oriented graph on 0..n-1 with one colour in 0..k-1 per arc.
///
/// Immutable once built. Per-colour in/out neighbourhoods are kept as
/// bitsets so that the length-two reachability test is a set intersection.
class ColouredTournament {
 public:
  /// The empty tournament (n = 0, k = 0).
  ColouredTournament() = default;

  /// Builds from one record per unordered pair, indexed by pair_index.
  /// `reversed[p]` selects v->u instead of u->v for the pair (u < v).
  ColouredTournament(std::size_t n, Colour k, std::span<const std::uint8_t> reversed,
                     std::span<const Colour> colours);

  /// Validating constructor used by the parser: every pair exactly once.
  static ColouredTournament from_arcs(std::size_t n, Colour k, std::span<const Arc> arcs);

  std::size_t order() const { return n_; }
  Colour colour_count() const { return k_; }

  bool has_arc(Vertex u, Vertex v) const {
    return u != v && matrix_[static_cast<std::size_t>(u) * n_ + v] >= 0;
  }
  /// Colour of the arc u->v if it exists.
  std::optional<Colour> arc_colour(Vertex u, Vertex v) const {
    if (!has_arc(u, v)) return std::nullopt;
    return static_cast<Colour>(matrix_[static_cast<std::size_t>(u) * n_ + v]);
  }
  /// Colour of whichever arc joins u and v (u != v).
  Colour pair_colour(Vertex u, Vertex v) const {
    auto c = matrix_[static_cast<std::size_t>(u) * n_ + v];
    if (c < 0) c = matrix_[static_cast<std::size_t>(v) * n_ + u];
    return static_cast<Colour>(c);
  }

  const VertexSet& out(Vertex u) const { return out_[u]; }
  const VertexSet& in(Vertex u) const { return in_[u]; }
  const VertexSet& out(Vertex u, Colour c) const { return out_by_colour_[c * n_ + u]; }
  const VertexSet& in(Vertex u, Colour c) const { return in_by_colour_[c * n_ + u]; }

  /// Arcs in lexicographic (from, to) order.
  std::vector<Arc> arcs() const;

  /// `reversed` flags in pair order, the orientation code of the tournament.
  std::vector<std::uint8_t> orientation() const;
  /// Colours in pair order.
  std::vector<Colour> pair_colours() const;

  void check_vertex(std::size_t v) const;

  friend bool operator==(const ColouredTournament& a, const ColouredTournament& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.matrix_ == b.matrix_;
  }

 private:
  void index_neighbourhoods();

  std::size_t n_ = 0;
  Colour k_ = 0;
  // matrix_[u*n+v] = colour of u->v, or -1 when the arc is v->u or u == v.
  std::vector<std::int64_t> matrix_;
  std::vector<VertexSet> out_, in_;
  std::vector<VertexSet> out_by_colour_, in_by_colour_;
};

/// Plain digraph without loops; antiparallel pairs allowed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  static Digraph from_arcs(std::size_t n, std::span<const std::pair<Vertex, Vertex>> arcs);

  std::size_t order() const { return n_; }
  bool has_arc(Vertex u, Vertex v) const { return out_[u].contains(v); }
  const VertexSet& out(Vertex u) const { return out_[u]; }
  const VertexSet& in(Vertex u) const { return in_[u]; }
  std::size_t arc_count() const;
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

  void check_vertex(std::size_t v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> out_, in_;
};

/// Simple undirected graph. Vertex order doubles as the well-ordering used
/// when orienting it into a tournament.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  static SimpleGraph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  static SimpleGraph cycle(std::size_t n);

  std::size_t order() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbours(Vertex u) const { return adj_[u]; }
  std::size_t degree(Vertex u) const { return adj_[u].count(); }

  /// Edges (u, v), u < v, in lexicographic order.
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  /// Position of {u, v} in edges(), if it is an edge.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  void check_vertex(std::size_t v) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::int64_t> index_;  // pair_index -> edge position or -1
};

struct InducedTournament {
  ColouredTournament tournament;
  /// map[i] is the host vertex that became vertex i.
  std::vector<Vertex> map;
};

/// Subtournament induced on W; new vertices keep the host's relative order.
InducedTournament induced_sub(const ColouredTournament& t, std::span<const Vertex> w);

// Text formats. Lines are LF-terminated; lines starting with '#' and blank
// lines are skipped.
ColouredTournament parse_cdt(std::string_view text);
std::string serialize_cdt(const ColouredTournament& t);
/// Records separated by blank lines.
std::vector<ColouredTournament> parse_cdt_stream(std::string_view text);

Digraph parse_dg(std::string_view text);
std::string serialize_dg(const Digraph& d);

SimpleGraph parse_ug(std::string_view text);
std::string serialize_ug(const SimpleGraph& g);

}  // namespace monopath

#endif  // MONOPATH_MODEL_HPP

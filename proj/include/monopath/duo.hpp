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

#ifndef MONOPATH_DUO_HPP
#define MONOPATH_DUO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "monopath/model.hpp"
#include "monopath/reach.hpp"

namespace monopath {

/// King-serf duo: disjoint kings K and serfs S, both kept sorted.
struct Duo {
  std::vector<Vertex> kings;
  std::vector<Vertex> serfs;

  std::size_t size() const { return kings.size() + serfs.size(); }

  friend bool operator==(const Duo&, const Duo&) = default;
};

/// Sorts and deduplicates both sides; throws Error if they intersect.
Duo make_duo(std::vector<Vertex> kings, std::vector<Vertex> serfs);

/// Every vertex is in K or S, is reached from K, or reaches S by a
/// monochromatic path of at most two arcs.
bool verify_duo(const ColouredTournament& t, const Duo& d);

/// Tie-break among duos of equal size: K first, compared as sorted vertex
/// lists where a proper prefix comes first and an empty K comes last; then S
/// as sorted lists.
bool duo_precedes(const Duo& a, const Duo& b);

struct MinDuoResult {
  std::size_t size;
  Duo witness;
};

/// Exact minimum duo, searched by increasing size with the duo_precedes
/// tie-break. Throws NotFoundWithinCap when `size_cap` is set and smaller
/// than the minimum.
MinDuoResult min_duo(const ColouredTournament& t, std::optional<std::size_t> size_cap = std::nullopt,
                     unsigned jobs = 1);

/// Uncoloured tournament used as an embedding target. Vertex order is the
/// order in which the embed-or-duo construction places pattern vertices.
class PatternTournament {
 public:
  PatternTournament() = default;

  /// `reversed[pair_index(m, i, j)]` selects j->i instead of i->j.
  static PatternTournament from_orientation(std::size_t m, std::span<const std::uint8_t> reversed);
  /// Drops the colours of a coloured tournament.
  static PatternTournament from_tournament(const ColouredTournament& t);

  std::size_t order() const { return m_; }
  bool has_arc(std::size_t i, std::size_t j) const {
    return i != j && (i < j ? !reversed_[pair_index(m_, i, j)] : reversed_[pair_index(m_, j, i)]);
  }
  const std::vector<std::uint8_t>& orientation() const { return reversed_; }
  /// Arcs in lexicographic (from, to) order.
  std::vector<std::pair<Vertex, Vertex>> arcs() const;
  /// Single-colour tournament with the same arcs.
  ColouredTournament as_tournament() const;

  friend bool operator==(const PatternTournament&, const PatternTournament&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<std::uint8_t> reversed_;
};

/// Order-respecting map of pattern vertices into a host; images[i] is the
/// image of pattern vertex i.
struct Embedding {
  PatternTournament pattern;
  std::vector<Vertex> images;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Images distinct and in range, and every pattern arc i->j maps onto a
/// forbidding host arc images[i]->images[j].
bool verify_embedding(const ColouredTournament& t, const Embedding& e);

using DuoOrEmbedding = std::variant<Duo, Embedding>;

/// Embed-or-duo construction.
///
/// Places pattern vertices one at a time in index order. For pattern vertex
/// d, the already-placed vertices split into K (images of pattern
/// out-neighbours of d) and S (images of pattern in-neighbours of d). The
/// image of d is the smallest host vertex v with a forbidding arc v->x for
/// every x in K and a forbidding arc y->v for every y in S. When no such v
/// exists, (K, S) is returned; it is a duo of size d < m. Otherwise the
/// complete embedding is returned.
DuoOrEmbedding duo_construct(const ColouredTournament& t, const PatternTournament& p);
/// Same, reusing a precomputed forbidding_edges(t).
DuoOrEmbedding duo_construct(const ColouredTournament& t, const ArcSet& forbidding,
                             const PatternTournament& p);

}  // namespace monopath

#endif  // MONOPATH_DUO_HPP

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

#ifndef MONOPATH_RAMSEY_HPP
#define MONOPATH_RAMSEY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monopath/duo.hpp"
#include "monopath/model.hpp"
#include "monopath/search.hpp"

namespace monopath {

/// One colour per edge, aligned with SimpleGraph::edges() (or, for a
/// pattern tournament, with lexicographic pair order).
using EdgeColouring = std::vector<Colour>;

struct MotifVerdict {
  bool holds = true;
  /// Present exactly when holds is false.
  std::optional<EdgeColouring> witness;
};

/// Orients every edge of G forward (low index to high) and every non-edge
/// backward.
PatternTournament build_t(const SimpleGraph& g);

/// Is there a vertex subset inducing in G a copy of H whose edges all share
/// one colour? Non-edges of H must be non-edges of G; throws
/// ColouringIncomplete if the colouring does not cover E(G).
bool has_mono_induced_motif(const SimpleGraph& g, const EdgeColouring& colouring, const SimpleGraph& h);

/// Does every k-colouring of E(G) contain a monochromatic induced H? The
/// first edge's colour is fixed to 0 (colour permutation symmetry); the
/// reported witness is the lexicographically least failing colouring.
MotifVerdict ramsey_check(const SimpleGraph& g, Colour k, const SimpleGraph& h,
                          std::uint64_t budget = default_budget(), unsigned jobs = 1);

/// Does every k-colouring of the pattern's arcs contain a quasi-monochromatic
/// directed triangle? Colourings are over lexicographic pair order with the
/// first arc fixed to colour 0.
MotifVerdict check_quasi_mono_c3_all_colourings(const PatternTournament& p, Colour k,
                                                std::uint64_t budget = default_budget(),
                                                unsigned jobs = 1);

/// Colours a pattern's arcs, giving a tournament with k colours.
ColouredTournament colour_pattern(const PatternTournament& p, Colour k, const EdgeColouring& colouring);

/// For a cycle 0-1-...-(L-1)-0 whose edge {i, i+1 mod L} points i -> i+1
/// when orientation[i] == 0 and backwards otherwise: do two of its arcs
/// form a directed path of length two?
bool cycle_has_directed_two_path(std::span<const std::uint8_t> orientation);

/// Lines "u v c" over E(G) in lexicographic edge order.
std::string serialize_colouring(const SimpleGraph& g, const EdgeColouring& colouring);

}  // namespace monopath

#endif  // MONOPATH_RAMSEY_HPP

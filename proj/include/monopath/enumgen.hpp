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

#ifndef MONOPATH_ENUMGEN_HPP
#define MONOPATH_ENUMGEN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string_view>
#include <vector>

#include "monopath/duo.hpp"
#include "monopath/model.hpp"
#include "monopath/search.hpp"

namespace monopath {

struct Seed {
  std::uint64_t value;
};

/// Pseudorandom stream "mt64-v1": std::mt19937_64 seeded with the seed value;
/// bounded draws by rejection sampling on the raw 64-bit output, coin flips
/// from the top bit. The engine is fully specified by the standard, so streams
/// are identical across platforms. Changing any of this breaks golden tests.
class Rng {
 public:
  static constexpr std::string_view name = "mt64-v1";

  explicit Rng(Seed seed) : engine_(seed.value) {}

  std::uint64_t next() { return engine_(); }
  bool coin() { return (next() >> 63) != 0; }
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Independent uniform orientation and colour per pair, in pair order.
ColouredTournament random_instance(std::size_t n, Colour k, Seed seed);
ColouredTournament random_instance(std::size_t n, Colour k, Rng& rng);

/// Each ordered pair (u, v), u != v, becomes an arc with the given probability.
Digraph random_digraph(std::size_t n, double arc_probability, Rng& rng);
SimpleGraph random_graph(std::size_t n, double edge_probability, Rng& rng);
PatternTournament random_pattern(std::size_t m, Rng& rng);

/// Moves vertex v to perm[v].
ColouredTournament relabel(const ColouredTournament& t, const std::vector<Vertex>& perm);

/// Per pair in lexicographic order: 2 * colour + (1 if the arc points from the
/// larger to the smaller vertex).
using CanonicalKey = std::vector<std::uint32_t>;

CanonicalKey serialize_key(const ColouredTournament& t);

/// Least serialize_key over all relabelings. Requires n <= 8.
CanonicalKey canonical_key(const ColouredTournament& t);
/// The relabeling of t whose serialize_key is canonical_key(t).
ColouredTournament canonical_form(const ColouredTournament& t);

using TournamentVisitor = std::function<void(const ColouredTournament&)>;

/// Single-colour tournaments on n vertices. Without `canonical`, all
/// 2^(n(n-1)/2) orientations with the first pair as the most significant
/// digit; with it, one canonical form per isomorphism class in increasing
/// key order (n <= 7).
void for_each_tournament(std::size_t n, bool canonical, const TournamentVisitor& visit,
                         std::uint64_t budget = default_budget());
std::vector<ColouredTournament> enumerate_tournaments(std::size_t n, bool canonical,
                                                      std::uint64_t budget = default_budget());

/// Every k-colouring of t's arcs in lexicographic pair order; with
/// `first_fixed` the first pair is always colour 0.
void for_each_colouring(const ColouredTournament& t, Colour k, bool first_fixed,
                        const TournamentVisitor& visit, std::uint64_t budget = default_budget());
std::vector<ColouredTournament> enumerate_colourings(const ColouredTournament& t, Colour k,
                                                     bool first_fixed = false,
                                                     std::uint64_t budget = default_budget());

}  // namespace monopath

#endif  // MONOPATH_ENUMGEN_HPP

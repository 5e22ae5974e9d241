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

#include "monopath/enumgen.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "monopath/error.hpp"

namespace monopath {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const auto r = next();
    if (r >= threshold) return r % bound;
  }
}

ColouredTournament random_instance(std::size_t n, Colour k, Seed seed) {
  Rng rng(seed);
  return random_instance(n, k, rng);
}

ColouredTournament random_instance(std::size_t n, Colour k, Rng& rng) {
  if (k == 0 && n > 1) throw Error("random_instance needs at least one colour");
  std::vector<std::uint8_t> reversed(pair_count(n));
  std::vector<Colour> colours(pair_count(n));
  for (std::size_t p = 0; p < reversed.size(); ++p) {
    reversed[p] = rng.coin() ? 1 : 0;
    colours[p] = static_cast<Colour>(rng.below(k));
  }
  return ColouredTournament(n, k, reversed, colours);
}

Digraph random_digraph(std::size_t n, double arc_probability, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng.unit() < arc_probability) arcs.emplace_back(u, v);
  return Digraph::from_arcs(n, arcs);
}

SimpleGraph random_graph(std::size_t n, double edge_probability, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.unit() < edge_probability) edges.emplace_back(u, v);
  return SimpleGraph::from_edges(n, edges);
}

PatternTournament random_pattern(std::size_t m, Rng& rng) {
  std::vector<std::uint8_t> reversed(pair_count(m));
  for (auto& r : reversed) r = rng.coin() ? 1 : 0;
  return PatternTournament::from_orientation(m, reversed);
}

ColouredTournament relabel(const ColouredTournament& t, const std::vector<Vertex>& perm) {
  const auto n = t.order();
  if (perm.size() != n) throw Error("permutation size does not match tournament order");
  std::vector<Arc> arcs;
  for (const auto& a : t.arcs()) arcs.push_back({perm[a.from], perm[a.to], a.colour});
  return ColouredTournament::from_arcs(n, t.colour_count(), arcs);
}

CanonicalKey serialize_key(const ColouredTournament& t) {
  CanonicalKey key;
  key.reserve(pair_count(t.order()));
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v = u + 1; v < t.order(); ++v)
      key.push_back(2 * t.pair_colour(u, v) + (t.has_arc(v, u) ? 1 : 0));
  return key;
}

namespace {

// Least key over all n! relabelings; `best_order[i]` is the host vertex
// given label i. Candidate keys are compared while being built.
CanonicalKey minimise_key(const ColouredTournament& t, std::vector<Vertex>& best_order) {
  const auto n = t.order();
  if (n > 8) throw Error("canonical keys are limited to n <= 8");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  CanonicalKey best = serialize_key(t);
  best_order = order;
  CanonicalKey candidate(best.size());
  do {
    std::size_t p = 0;
    bool smaller = false, larger = false;
    for (std::size_t i = 0; i < n && !larger; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++p) {
        const auto u = order[i], v = order[j];
        const std::uint32_t entry = 2 * t.pair_colour(u, v) + (t.has_arc(v, u) ? 1 : 0);
        candidate[p] = entry;
        if (!smaller) {
          if (entry > best[p]) {
            larger = true;
            break;
          }
          if (entry < best[p]) smaller = true;
        }
      }
    }
    if (smaller) {
      best = candidate;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

ColouredTournament from_key(std::size_t n, Colour k, const CanonicalKey& key) {
  std::vector<std::uint8_t> reversed;
  std::vector<Colour> colours;
  for (auto entry : key) {
    reversed.push_back(entry & 1U);
    colours.push_back(entry >> 1);
  }
  return ColouredTournament(n, k, reversed, colours);
}

std::vector<ColouredTournament> canonical_tournaments(std::size_t n) {
  if (n > 7) throw Error("canonical enumeration is limited to n <= 7");
  if (n == 0) return {ColouredTournament{}};
  std::vector<ColouredTournament> level{ColouredTournament(1, 1, {}, {})};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<CanonicalKey, ColouredTournament> classes;
    for (const auto& base : level) {
      const auto old_pairs = base.orientation();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (size - 1)); ++mask) {
        // New vertex size-1; bit u of mask reverses the pair (u, size-1).
        std::vector<std::uint8_t> reversed(pair_count(size));
        for (std::size_t u = 0; u < size; ++u)
          for (std::size_t v = u + 1; v < size; ++v)
            reversed[pair_index(size, u, v)] =
                v == size - 1 ? static_cast<std::uint8_t>((mask >> u) & 1U)
                              : old_pairs[pair_index(size - 1, u, v)];
        ColouredTournament t(size, 1, reversed, std::vector<Colour>(pair_count(size), 0));
        std::vector<Vertex> order;
        auto key = minimise_key(t, order);
        if (!classes.contains(key)) classes.emplace(key, from_key(size, 1, key));
      }
    }
    level.clear();
    for (auto& [key, t] : classes) level.push_back(std::move(t));
  }
  return level;
}

}  // namespace

CanonicalKey canonical_key(const ColouredTournament& t) {
  std::vector<Vertex> order;
  return minimise_key(t, order);
}

ColouredTournament canonical_form(const ColouredTournament& t) {
  return from_key(t.order(), t.colour_count(), canonical_key(t));
}

void for_each_tournament(std::size_t n, bool canonical, const TournamentVisitor& visit,
                         std::uint64_t budget) {
  if (canonical) {
    for (const auto& t : canonical_tournaments(n)) visit(t);
    return;
  }
  const auto pairs = pair_count(n);
  check_budget(pairs >= 64 ? UINT64_MAX : saturating_pow(2, pairs), budget);
  const std::vector<Colour> colours(pairs, 0);
  std::vector<std::uint8_t> reversed(pairs);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    for (std::size_t p = 0; p < pairs; ++p) reversed[p] = (code >> (pairs - 1 - p)) & 1U;
    visit(ColouredTournament(n, 1, reversed, colours));
  }
}

std::vector<ColouredTournament> enumerate_tournaments(std::size_t n, bool canonical, std::uint64_t budget) {
  std::vector<ColouredTournament> out;
  for_each_tournament(n, canonical, [&](const ColouredTournament& t) { out.push_back(t); }, budget);
  return out;
}

void for_each_colouring(const ColouredTournament& t, Colour k, bool first_fixed,
                        const TournamentVisitor& visit, std::uint64_t budget) {
  const auto pairs = pair_count(t.order());
  if (k == 0 && pairs > 0) throw Error("colourings need at least one colour");
  const std::size_t free = (first_fixed && pairs > 0) ? pairs - 1 : pairs;
  const auto count = saturating_pow(k, free);
  check_budget(count, budget);
  const auto reversed = t.orientation();
  std::vector<Colour> colours(pairs, 0);
  for (std::uint64_t index = 0; index < count; ++index) {
    auto rest = index;
    for (std::size_t p = pairs; p > pairs - free; --p) {
      colours[p - 1] = static_cast<Colour>(rest % k);
      rest /= k;
    }
    visit(ColouredTournament(t.order(), k, reversed, colours));
  }
}

std::vector<ColouredTournament> enumerate_colourings(const ColouredTournament& t, Colour k,
                                                     bool first_fixed, std::uint64_t budget) {
  std::vector<ColouredTournament> out;
  for_each_colouring(t, k, first_fixed, [&](const ColouredTournament& c) { out.push_back(c); }, budget);
  return out;
}

}  // namespace monopath

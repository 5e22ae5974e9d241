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

#include "monopath/ramsey.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "monopath/error.hpp"

namespace monopath {

PatternTournament build_t(const SimpleGraph& g) {
  const auto n = g.order();
  std::vector<std::uint8_t> reversed;
  reversed.reserve(pair_count(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) reversed.push_back(g.adjacent(i, j) ? 0 : 1);
  return PatternTournament::from_orientation(n, reversed);
}

namespace {

// Backtracking search for an induced copy of H in G with all H-edges coloured c.
class MotifMatcher {
 public:
  MotifMatcher(const SimpleGraph& g, const EdgeColouring& colouring, const SimpleGraph& h)
      : g_(g), colouring_(colouring), h_(h), order_(h.order()) {
    std::iota(order_.begin(), order_.end(), Vertex{0});
    // Most constrained pattern vertices first.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return h_.degree(a) > h_.degree(b); });
  }

  bool find(std::optional<Colour> colour) {
    colour_ = colour;
    // Degree prefilter: a host vertex must have at least deg_H edges of the colour.
    colour_degree_.assign(g_.order(), 0);
    for (std::size_t e = 0; e < g_.edges().size(); ++e) {
      if (colour_ && colouring_[e] != *colour_) continue;
      ++colour_degree_[g_.edges()[e].first];
      ++colour_degree_[g_.edges()[e].second];
    }
    image_.assign(h_.order(), 0);
    used_ = VertexSet(g_.order());
    return extend(0);
  }

 private:
  bool compatible(std::size_t depth, Vertex candidate) const {
    const Vertex hv = order_[depth];
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex hu = order_[i];
      const bool want = h_.adjacent(hu, hv);
      if (want != g_.adjacent(image_[hu], candidate)) return false;
      if (want && colour_ && colouring_[*g_.edge_index(image_[hu], candidate)] != *colour_) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex hv = order_[depth];
    for (Vertex cand = 0; cand < g_.order(); ++cand) {
      if (used_.contains(cand) || colour_degree_[cand] < h_.degree(hv)) continue;
      if (!compatible(depth, cand)) continue;
      image_[hv] = cand;
      used_.insert(cand);
      if (extend(depth + 1)) return true;
      used_.erase(cand);
    }
    return false;
  }

  const SimpleGraph& g_;
  const EdgeColouring& colouring_;
  const SimpleGraph& h_;
  std::vector<Vertex> order_;
  std::optional<Colour> colour_;
  std::vector<std::size_t> colour_degree_;
  std::vector<Vertex> image_;
  VertexSet used_;
};

// Colouring number `index` with the first position fixed to 0 and the rest
// read as base-k digits, most significant first.
EdgeColouring decode_colouring(std::uint64_t index, std::size_t length, Colour k) {
  EdgeColouring c(length, 0);
  for (std::size_t pos = length; pos > 1; --pos) {
    c[pos - 1] = static_cast<Colour>(index % k);
    index /= k;
  }
  return c;
}

std::uint64_t colouring_count(std::size_t length, Colour k) {
  return length == 0 ? 1 : saturating_pow(k, length - 1);
}

}  // namespace

bool has_mono_induced_motif(const SimpleGraph& g, const EdgeColouring& colouring, const SimpleGraph& h) {
  if (colouring.size() != g.edges().size()) throw ColouringIncomplete(colouring.size(), g.edges().size());
  if (h.order() > g.order()) return false;
  MotifMatcher matcher(g, colouring, h);
  if (h.edges().empty()) return matcher.find(std::nullopt);
  std::set<Colour> colours(colouring.begin(), colouring.end());
  for (auto c : colours)
    if (matcher.find(c)) return true;
  return false;
}

MotifVerdict ramsey_check(const SimpleGraph& g, Colour k, const SimpleGraph& h, std::uint64_t budget,
                          unsigned jobs) {
  if (k == 0) throw Error("ramsey_check needs at least one colour");
  const auto edges = g.edges().size();
  const auto count = colouring_count(edges, k);
  check_budget(count, budget);
  auto failing = parallel_find_first(count, jobs, [&](std::uint64_t i) {
    return !has_mono_induced_motif(g, decode_colouring(i, edges, k), h);
  });
  if (!failing) return {true, std::nullopt};
  return {false, decode_colouring(*failing, edges, k)};
}

ColouredTournament colour_pattern(const PatternTournament& p, Colour k, const EdgeColouring& colouring) {
  return ColouredTournament(p.order(), k, p.orientation(), colouring);
}

MotifVerdict check_quasi_mono_c3_all_colourings(const PatternTournament& p, Colour k,
                                                std::uint64_t budget, unsigned jobs) {
  if (k == 0) throw Error("check needs at least one colour");
  const auto m = p.order();
  const auto arcs = pair_count(m);
  const auto count = colouring_count(arcs, k);
  check_budget(count, budget);

  // Directed triangles as pair-index triples.
  std::vector<std::array<std::size_t, 3>> triangles;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) {
        const bool cyclic = (p.has_arc(a, b) && p.has_arc(b, c) && p.has_arc(c, a)) ||
                            (p.has_arc(a, c) && p.has_arc(c, b) && p.has_arc(b, a));
        if (cyclic) triangles.push_back({pair_index(m, a, b), pair_index(m, b, c), pair_index(m, a, c)});
      }

  auto failing = parallel_find_first(count, jobs, [&](std::uint64_t i) {
    const auto c = decode_colouring(i, arcs, k);
    for (const auto& tri : triangles) {
      const auto x = c[tri[0]], y = c[tri[1]], z = c[tri[2]];
      if (x == y || y == z || x == z) return false;
    }
    return true;
  });
  if (!failing) return {true, std::nullopt};
  return {false, decode_colouring(*failing, arcs, k)};
}

bool cycle_has_directed_two_path(std::span<const std::uint8_t> orientation) {
  const auto len = orientation.size();
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < len; ++i) {
    const auto a = i, b = (i + 1) % len;
    arcs.push_back(orientation[i] ? std::pair{b, a} : std::pair{a, b});
  }
  for (const auto& first : arcs)
    for (const auto& second : arcs)
      if (&first != &second && first.second == second.first && first.first != second.second) return true;
  return false;
}

std::string serialize_colouring(const SimpleGraph& g, const EdgeColouring& colouring) {
  if (colouring.size() != g.edges().size()) throw ColouringIncomplete(colouring.size(), g.edges().size());
  std::ostringstream out;
  for (std::size_t e = 0; e < colouring.size(); ++e)
    out << g.edges()[e].first << ' ' << g.edges()[e].second << ' ' << colouring[e] << '\n';
  return out.str();
}

}  // namespace monopath

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

#include "monopath/duo.hpp"

#include <algorithm>
#include <functional>

#include "monopath/error.hpp"
#include "monopath/search.hpp"

namespace monopath {

Duo make_duo(std::vector<Vertex> kings, std::vector<Vertex> serfs) {
  std::sort(kings.begin(), kings.end());
  kings.erase(std::unique(kings.begin(), kings.end()), kings.end());
  std::sort(serfs.begin(), serfs.end());
  serfs.erase(std::unique(serfs.begin(), serfs.end()), serfs.end());
  std::vector<Vertex> common;
  std::set_intersection(kings.begin(), kings.end(), serfs.begin(), serfs.end(),
                        std::back_inserter(common));
  if (!common.empty())
    throw Error("kings and serfs share vertex " + std::to_string(common.front()));
  return {std::move(kings), std::move(serfs)};
}

bool verify_duo(const ColouredTournament& t, const Duo& d) {
  for (auto x : d.kings) t.check_vertex(x);
  for (auto y : d.serfs) t.check_vertex(y);
  for (Vertex v = 0; v < t.order(); ++v) {
    auto covered = [&] {
      for (auto x : d.kings)
        if (mono_reach_within(t, x, v, 2)) return true;
      for (auto y : d.serfs)
        if (mono_reach_within(t, v, y, 2)) return true;
      return false;
    };
    if (!covered()) return false;
  }
  return true;
}

bool duo_precedes(const Duo& a, const Duo& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.kings != b.kings) {
    if (a.kings.empty()) return false;
    if (b.kings.empty()) return true;
    return a.kings < b.kings;
  }
  return a.serfs < b.serfs;
}

namespace {

// Kings of size 1..max_size in sorted-list lexicographic order (prefix first),
// then the empty set. Stored flat: offsets[i]..offsets[i+1] into members.
struct KingCandidates {
  std::vector<Vertex> members;
  std::vector<std::size_t> offsets{0};

  std::size_t count() const { return offsets.size() - 1; }
  std::span<const Vertex> at(std::size_t i) const {
    return {members.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }
};

KingCandidates king_candidates(std::size_t n, std::size_t max_size) {
  KingCandidates out;
  std::vector<Vertex> prefix;
  std::function<void(Vertex)> extend = [&](Vertex from) {
    for (Vertex v = from; v < n; ++v) {
      prefix.push_back(v);
      out.members.insert(out.members.end(), prefix.begin(), prefix.end());
      out.offsets.push_back(out.members.size());
      if (prefix.size() < max_size) extend(v + 1);
      prefix.pop_back();
    }
  };
  if (max_size > 0) extend(0);
  out.offsets.push_back(out.members.size());  // empty K last
  return out;
}

}  // namespace

MinDuoResult min_duo(const ColouredTournament& t, std::optional<std::size_t> size_cap, unsigned jobs) {
  const auto n = t.order();
  if (n == 0) return {0, Duo{}};

  // king_cover[x]: vertices x covers as a king; serf_cover[y]: as a serf.
  std::vector<VertexSet> king_cover, serf_cover;
  for (Vertex v = 0; v < n; ++v) {
    king_cover.push_back(mono_reach_set(t, v, 2));
    serf_cover.push_back(mono_coreach_set(t, v, 2));
  }
  const auto everything = VertexSet::full(n);
  const std::size_t limit = size_cap ? std::min(*size_cap, n) : n;

  for (std::size_t size = 1; size <= limit; ++size) {
    const auto kings = king_candidates(n, size);
    std::vector<std::optional<std::vector<Vertex>>> found(kings.count());

    // Lexicographically least S completing the given K, if any.
    auto complete = [&](std::size_t index) -> std::optional<std::vector<Vertex>> {
      const auto k = kings.at(index);
      VertexSet covered(n);
      VertexSet in_k(n);
      for (auto x : k) {
        covered |= king_cover[x];
        in_k.insert(x);
      }
      const std::size_t serf_count = size - k.size();
      if (serf_count == 0) {
        if (covered.is_full()) return std::vector<Vertex>{};
        return std::nullopt;
      }
      const auto pool = (everything - in_k).to_vector();
      std::optional<std::vector<Vertex>> serfs;
      for_each_combination(pool.size(), serf_count, [&](const std::vector<std::uint32_t>& pick) {
        VertexSet c = covered;
        for (auto i : pick) c |= serf_cover[pool[i]];
        if (!c.is_full()) return false;
        std::vector<Vertex> s;
        for (auto i : pick) s.push_back(pool[i]);
        serfs = std::move(s);
        return true;
      });
      return serfs;
    };

    auto hit = parallel_find_first(kings.count(), jobs, [&](std::uint64_t i) {
      auto s = complete(static_cast<std::size_t>(i));
      if (!s) return false;
      found[i] = std::move(s);
      return true;
    });
    if (hit) {
      auto k = kings.at(static_cast<std::size_t>(*hit));
      Duo d{{k.begin(), k.end()}, std::move(*found[*hit])};
      return {size, std::move(d)};
    }
  }
  throw NotFoundWithinCap(limit);
}

// ---------------------------------------------------------------------------

PatternTournament PatternTournament::from_orientation(std::size_t m,
                                                      std::span<const std::uint8_t> reversed) {
  if (reversed.size() != pair_count(m)) throw Error("pattern needs one orientation per pair");
  PatternTournament p;
  p.m_ = m;
  p.reversed_.reserve(reversed.size());
  for (auto r : reversed) p.reversed_.push_back(r ? 1 : 0);
  return p;
}

PatternTournament PatternTournament::from_tournament(const ColouredTournament& t) {
  return from_orientation(t.order(), t.orientation());
}

std::vector<std::pair<Vertex, Vertex>> PatternTournament::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> r;
  for (Vertex i = 0; i < m_; ++i)
    for (Vertex j = 0; j < m_; ++j)
      if (has_arc(i, j)) r.emplace_back(i, j);
  return r;
}

ColouredTournament PatternTournament::as_tournament() const {
  std::vector<Colour> colours(pair_count(m_), 0);
  return ColouredTournament(m_, 1, reversed_, colours);
}

bool verify_embedding(const ColouredTournament& t, const Embedding& e) {
  const auto m = e.pattern.order();
  if (e.images.size() != m) return false;
  for (auto v : e.images)
    if (v >= t.order()) return false;
  auto sorted = e.images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (e.pattern.has_arc(i, j) && !is_forbidding(t, e.images[i], e.images[j])) return false;
  return true;
}

DuoOrEmbedding duo_construct(const ColouredTournament& t, const PatternTournament& p) {
  return duo_construct(t, forbidding_edges(t), p);
}

DuoOrEmbedding duo_construct(const ColouredTournament& t, const ArcSet& forbidding,
                             const PatternTournament& p) {
  const auto n = t.order();
  std::vector<Vertex> images;
  images.reserve(p.order());
  for (std::size_t step = 0; step < p.order(); ++step) {
    std::vector<Vertex> kings, serfs;
    auto candidates = VertexSet::full(n);
    for (std::size_t earlier = 0; earlier < step; ++earlier) {
      const auto image = images[earlier];
      if (p.has_arc(step, earlier)) {
        kings.push_back(image);
        candidates &= forbidding.in(image);   // needs v->image forbidding
      } else {
        serfs.push_back(image);
        candidates &= forbidding.out(image);  // needs image->v forbidding
      }
    }
    const auto v = candidates.first();
    if (v == VertexSet::npos) return make_duo(std::move(kings), std::move(serfs));
    images.push_back(static_cast<Vertex>(v));
  }
  return Embedding{p, std::move(images)};
}

}  // namespace monopath

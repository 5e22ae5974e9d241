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

#include "monopath/kernels.hpp"

#include <algorithm>
#include <functional>

#include "monopath/error.hpp"
#include "monopath/reach.hpp"
#include "monopath/search.hpp"

namespace monopath {

bool is_absorbing(const ColouredTournament& t, const std::vector<Vertex>& s) {
  VertexSet absorbed(t.order());
  for (auto v : s) {
    t.check_vertex(v);
    absorbed |= mono_coreach_set(t, v);
  }
  return absorbed.is_full();
}

AbsorbingResult min_absorbing(const ColouredTournament& t) {
  const auto n = t.order();
  if (n == 0) throw Error("min_absorbing needs a nonempty tournament");
  std::vector<VertexSet> coreach;
  for (Vertex v = 0; v < n; ++v) coreach.push_back(mono_coreach_set(t, v));
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<Vertex> witness;
    bool found = for_each_combination(n, size, [&](const std::vector<std::uint32_t>& pick) {
      VertexSet absorbed(n);
      for (auto v : pick) absorbed |= coreach[v];
      if (!absorbed.is_full()) return false;
      witness.assign(pick.begin(), pick.end());
      return true;
    });
    if (found) return {size, witness};
  }
  throw Error("no absorbing set found");  // V itself always absorbs
}

namespace {

VertexSet within_two_from(const Digraph& d, Vertex x) {
  VertexSet s = d.out(x);
  d.out(x).for_each([&](Vertex w) { s |= d.out(w); });
  s.insert(x);
  return s;
}

VertexSet within_two_to(const Digraph& d, Vertex y) {
  VertexSet s = d.in(y);
  d.in(y).for_each([&](Vertex w) { s |= d.in(w); });
  s.insert(y);
  return s;
}

bool independent(const Digraph& d, const std::vector<Vertex>& members) {
  auto set = VertexSet::of(d.order(), members);
  for (auto v : members)
    if (d.out(v).intersects(set)) return false;
  return true;
}

}  // namespace

bool is_quasi_kernel(const Digraph& d, const std::vector<Vertex>& k) {
  for (auto v : k) d.check_vertex(v);
  if (!independent(d, k)) return false;
  VertexSet covered(d.order());
  for (auto x : k) covered |= within_two_from(d, x);
  return covered.is_full();
}

std::vector<Vertex> quasi_kernel(const Digraph& d) {
  const auto n = d.order();
  if (n == 0) return {};
  std::vector<VertexSet> reach;
  for (Vertex v = 0; v < n; ++v) reach.push_back(within_two_from(d, v));
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<Vertex> witness;
    bool found = for_each_combination(n, size, [&](const std::vector<std::uint32_t>& pick) {
      VertexSet covered(n), members(n);
      for (auto v : pick) {
        if (d.out(v).intersects(members) || d.in(v).intersects(members)) return false;
        members.insert(v);
        covered |= reach[v];
      }
      if (!covered.is_full()) return false;
      witness.assign(pick.begin(), pick.end());
      return true;
    });
    if (found) return witness;
  }
  throw Error("digraph without a quasi-kernel");
}

bool is_partition_duo(const Digraph& d, const PartitionDuo& p) {
  for (auto v : p.kernel) d.check_vertex(v);
  for (auto v : p.sink) d.check_vertex(v);
  auto k = VertexSet::of(d.order(), p.kernel);
  if (k.intersects(VertexSet::of(d.order(), p.sink))) return false;
  if (!independent(d, p.kernel) || !independent(d, p.sink)) return false;
  VertexSet covered(d.order());
  for (auto x : p.kernel) covered |= within_two_from(d, x);
  for (auto y : p.sink) covered |= within_two_to(d, y);
  return covered.is_full();
}

PartitionDuo quasi_partition_duo(const Digraph& d) {
  const auto n = d.order();
  if (n == 0) return {};
  std::vector<VertexSet> from, to;
  for (Vertex v = 0; v < n; ++v) {
    from.push_back(within_two_from(d, v));
    to.push_back(within_two_to(d, v));
  }
  const auto adjacent = [&](Vertex v, const VertexSet& members) {
    return d.out(v).intersects(members) || d.in(v).intersects(members);
  };

  for (std::size_t size = 1; size <= n; ++size) {
    std::optional<PartitionDuo> result;
    std::vector<Vertex> kernel;
    VertexSet kernel_set(n), covered(n);

    // Serfs of the remaining size, lexicographic, independent, outside K.
    auto complete = [&]() {
      const std::size_t want = size - kernel.size();
      const auto pool = (VertexSet::full(n) - kernel_set).to_vector();
      std::vector<Vertex> sink;
      bool ok = for_each_combination(pool.size(), want, [&](const std::vector<std::uint32_t>& pick) {
        VertexSet members(n), c = covered;
        for (auto i : pick) {
          if (adjacent(pool[i], members)) return false;
          members.insert(pool[i]);
          c |= to[pool[i]];
        }
        if (!c.is_full()) return false;
        sink.clear();
        for (auto i : pick) sink.push_back(pool[i]);
        return true;
      });
      if (ok) result = PartitionDuo{kernel, sink};
      return ok;
    };

    // Include-first branching visits kernels in characteristic-vector order.
    std::function<bool(Vertex)> branch = [&](Vertex v) -> bool {
      if (v == n) return complete();
      if (kernel.size() < size && !adjacent(v, kernel_set)) {
        kernel.push_back(v);
        kernel_set.insert(v);
        auto saved = covered;
        covered |= from[v];
        bool done = branch(v + 1);
        covered = std::move(saved);
        kernel_set.erase(v);
        kernel.pop_back();
        if (done) return true;
      }
      return branch(v + 1);
    };
    if (branch(0)) return *result;
  }
  throw Error("digraph without a partition duo");
}

namespace {

bool quasi_monochromatic(std::initializer_list<Colour> colours) {
  for (auto c : colours)
    if (static_cast<std::size_t>(std::count(colours.begin(), colours.end(), c)) + 1 >= colours.size())
      return true;
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> gs_violation(const ColouredTournament& t) {
  const auto n = t.order();
  auto col = [&](Vertex u, Vertex v) { return *t.arc_colour(u, v); };
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!t.has_arc(a, b)) continue;
      for (Vertex c = a + 1; c < n; ++c) {
        if (c == b || !t.has_arc(b, c) || !t.has_arc(c, a)) continue;
        if (!quasi_monochromatic({col(a, b), col(b, c), col(c, a)})) return std::vector<Vertex>{a, b, c};
      }
    }
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!t.has_arc(a, b)) continue;
      for (Vertex c = a + 1; c < n; ++c) {
        if (c == b || !t.has_arc(b, c)) continue;
        for (Vertex d = a + 1; d < n; ++d) {
          if (d == b || d == c || !t.has_arc(c, d) || !t.has_arc(d, a)) continue;
          if (!quasi_monochromatic({col(a, b), col(b, c), col(c, d), col(d, a)}))
            return std::vector<Vertex>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

bool gs_condition(const ColouredTournament& t) { return !gs_violation(t); }

std::optional<std::array<Vertex, 3>> minggang_violation(const ColouredTournament& t) {
  const auto n = t.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        const auto x = t.pair_colour(a, b), y = t.pair_colour(b, c), z = t.pair_colour(a, c);
        if (x != y && y != z && x != z) return std::array<Vertex, 3>{a, b, c};
      }
  return std::nullopt;
}

bool minggang_condition(const ColouredTournament& t) { return !minggang_violation(t); }

}  // namespace monopath

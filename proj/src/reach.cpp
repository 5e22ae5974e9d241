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

#include "monopath/reach.hpp"

#include "monopath/error.hpp"

namespace monopath {

namespace {

// Layered search restricted to one colour. Within a colour class the shortest
// walk between two vertices is a path, so walk distance equals path distance.
template <bool Forward>
VertexSet colour_bfs(const ColouredTournament& t, Vertex source, Colour c, std::size_t max_len) {
  const auto n = t.order();
  VertexSet seen(n);
  seen.insert(source);
  VertexSet frontier(n);
  frontier.insert(source);
  for (std::size_t depth = 0; depth < max_len && !frontier.empty(); ++depth) {
    VertexSet next(n);
    frontier.for_each([&](Vertex w) {
      if constexpr (Forward)
        next |= t.out(w, c);
      else
        next |= t.in(w, c);
    });
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

template <bool Forward>
VertexSet reach_set(const ColouredTournament& t, Vertex source, std::size_t max_len) {
  t.check_vertex(source);
  const auto n = t.order();
  VertexSet result(n);
  result.insert(source);
  if (max_len == 0) return result;
  if (max_len <= 2) {
    // Direct arcs have a single colour, hence are monochromatic.
    result |= Forward ? t.out(source) : t.in(source);
    if (max_len == 2) {
      for (Colour c = 0; c < t.colour_count(); ++c) {
        const auto& first = Forward ? t.out(source, c) : t.in(source, c);
        first.for_each([&](Vertex w) { result |= Forward ? t.out(w, c) : t.in(w, c); });
      }
    }
    return result;
  }
  for (Colour c = 0; c < t.colour_count(); ++c) result |= colour_bfs<Forward>(t, source, c, max_len);
  return result;
}

}  // namespace

bool mono_reach_within(const ColouredTournament& t, Vertex u, Vertex v, std::size_t max_len) {
  t.check_vertex(u);
  t.check_vertex(v);
  if (u == v) return true;
  if (max_len == 0) return false;
  if (t.has_arc(u, v)) return true;
  if (max_len == 1) return false;
  for (Colour c = 0; c < t.colour_count(); ++c)
    if (t.out(u, c).intersects(t.in(v, c))) return true;
  if (max_len == 2) return false;
  return reach_set<true>(t, u, max_len).contains(v);
}

bool mono_reach_any(const ColouredTournament& t, Vertex u, Vertex v) {
  return mono_reach_within(t, u, v, t.order());
}

VertexSet mono_reach_set(const ColouredTournament& t, Vertex u, std::size_t max_len) {
  return reach_set<true>(t, u, max_len);
}

VertexSet mono_coreach_set(const ColouredTournament& t, Vertex v, std::size_t max_len) {
  return reach_set<false>(t, v, max_len);
}

VertexSet mono_reach_set(const ColouredTournament& t, Vertex u) {
  return reach_set<true>(t, u, t.order());
}

VertexSet mono_coreach_set(const ColouredTournament& t, Vertex v) {
  return reach_set<false>(t, v, t.order());
}

std::size_t ArcSet::size() const {
  std::size_t c = 0;
  for (const auto& s : out_) c += s.count();
  return c;
}

std::vector<std::pair<Vertex, Vertex>> ArcSet::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> r;
  for (Vertex u = 0; u < out_.size(); ++u) out_[u].for_each([&](Vertex v) { r.emplace_back(u, v); });
  return r;
}

bool is_forbidding(const ColouredTournament& t, Vertex u, Vertex v) {
  return t.has_arc(u, v) && !mono_reach_within(t, v, u, 2);
}

ArcSet forbidding_edges(const ColouredTournament& t) {
  const auto n = t.order();
  ArcSet result(n);
  for (Vertex u = 0; u < n; ++u) {
    t.out(u).for_each([&](Vertex v) {
      // Reverse path v->w->u must use two arcs of one colour.
      bool returns = false;
      for (Colour c = 0; c < t.colour_count() && !returns; ++c)
        returns = t.out(v, c).intersects(t.in(u, c));
      if (!returns) result.insert(u, v);
    });
  }
  return result;
}

std::optional<QuasiMonoTriangle> classify_triangle(const ColouredTournament& t, Vertex a, Vertex b,
                                                   Vertex c) {
  const Colour ab = *t.arc_colour(a, b);
  const Colour bc = *t.arc_colour(b, c);
  const Colour ca = *t.arc_colour(c, a);
  QuasiMonoTriangle tri{{a, b, c}, std::nullopt};
  if (ab == bc && bc == ca) return tri;
  if (ab == bc) {
    tri.distinguished = {c, a};
  } else if (bc == ca) {
    tri.distinguished = {a, b};
  } else if (ab == ca) {
    tri.distinguished = {b, c};
  } else {
    return std::nullopt;
  }
  return tri;
}

std::vector<QuasiMonoTriangle> quasi_mono_triangles(const ColouredTournament& t) {
  std::vector<QuasiMonoTriangle> result;
  const auto n = t.order();
  for (Vertex a = 0; a < n; ++a) {
    t.out(a).for_each([&](Vertex b) {
      if (b < a) return;
      // c > a closes the cycle: b->c and c->a.
      auto closers = t.out(b) & t.in(a);
      closers.for_each([&](Vertex c) {
        if (c < a) return;
        if (auto tri = classify_triangle(t, a, b, c)) result.push_back(*tri);
      });
    });
  }
  return result;
}

}  // namespace monopath

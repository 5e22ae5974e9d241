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

#include "monopath/model.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "monopath/error.hpp"

namespace monopath {

std::vector<std::pair<Vertex, Vertex>> lex_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(pair_count(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

// ---------------------------------------------------------------------------
// ColouredTournament

ColouredTournament::ColouredTournament(std::size_t n, Colour k,
                                       std::span<const std::uint8_t> reversed,
                                       std::span<const Colour> colours)
    : n_(n), k_(k), matrix_(n * n, -1) {
  if (reversed.size() != pair_count(n) || colours.size() != pair_count(n))
    throw Error("tournament needs one orientation and colour per pair");
  std::size_t p = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v, ++p) {
      if (colours[p] >= k) throw ParseError(ParseError::Kind::ColourOutOfRange,
                                            "colour " + std::to_string(colours[p]) +
                                                " out of range for k=" + std::to_string(k));
      if (reversed[p])
        matrix_[v * n + u] = colours[p];
      else
        matrix_[u * n + v] = colours[p];
    }
  }
  index_neighbourhoods();
}

ColouredTournament ColouredTournament::from_arcs(std::size_t n, Colour k,
                                                 std::span<const Arc> arcs) {
  std::vector<std::uint8_t> reversed(pair_count(n), 0);
  std::vector<Colour> colours(pair_count(n), 0);
  std::vector<std::uint8_t> seen(pair_count(n), 0);
  for (const auto& a : arcs) {
    if (a.from >= n) throw VertexOutOfRange(a.from, n);
    if (a.to >= n) throw VertexOutOfRange(a.to, n);
    if (a.from == a.to)
      throw ParseError(ParseError::Kind::MalformedLine,
                       "self-loop at vertex " + std::to_string(a.from));
    if (a.colour >= k)
      throw ParseError(ParseError::Kind::ColourOutOfRange,
                       "colour " + std::to_string(a.colour) + " on arc " +
                           std::to_string(a.from) + "->" + std::to_string(a.to) +
                           " out of range for k=" + std::to_string(k));
    auto u = std::min(a.from, a.to), v = std::max(a.from, a.to);
    auto p = pair_index(n, u, v);
    if (seen[p])
      throw ParseError(ParseError::Kind::DuplicateArc,
                       "duplicate arc on pair " + std::to_string(u) + " " + std::to_string(v));
    seen[p] = 1;
    reversed[p] = a.from > a.to;
    colours[p] = a.colour;
  }
  for (std::size_t p = 0; p < seen.size(); ++p) {
    if (!seen[p]) {
      auto pairs = lex_pairs(n);
      throw ParseError(ParseError::Kind::MissingArc,
                       "missing arc on pair " + std::to_string(pairs[p].first) + " " +
                           std::to_string(pairs[p].second));
    }
  }
  return ColouredTournament(n, k, reversed, colours);
}

void ColouredTournament::index_neighbourhoods() {
  out_.assign(n_, VertexSet(n_));
  in_.assign(n_, VertexSet(n_));
  out_by_colour_.assign(static_cast<std::size_t>(k_) * n_, VertexSet(n_));
  in_by_colour_.assign(static_cast<std::size_t>(k_) * n_, VertexSet(n_));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      auto c = matrix_[u * n_ + v];
      if (c < 0) continue;
      out_[u].insert(v);
      in_[v].insert(u);
      out_by_colour_[static_cast<std::size_t>(c) * n_ + u].insert(v);
      in_by_colour_[static_cast<std::size_t>(c) * n_ + v].insert(u);
    }
  }
}

std::vector<Arc> ColouredTournament::arcs() const {
  std::vector<Arc> result;
  result.reserve(pair_count(n_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = 0; v < n_; ++v)
      if (auto c = matrix_[static_cast<std::size_t>(u) * n_ + v]; c >= 0)
        result.push_back({u, v, static_cast<Colour>(c)});
  return result;
}

std::vector<std::uint8_t> ColouredTournament::orientation() const {
  std::vector<std::uint8_t> r;
  r.reserve(pair_count(n_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) r.push_back(has_arc(v, u) ? 1 : 0);
  return r;
}

std::vector<Colour> ColouredTournament::pair_colours() const {
  std::vector<Colour> r;
  r.reserve(pair_count(n_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v) r.push_back(pair_colour(u, v));
  return r;
}

void ColouredTournament::check_vertex(std::size_t v) const {
  if (v >= n_) throw VertexOutOfRange(v, n_);
}

// ---------------------------------------------------------------------------
// Digraph

Digraph::Digraph(std::size_t n) : n_(n), out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

Digraph Digraph::from_arcs(std::size_t n, std::span<const std::pair<Vertex, Vertex>> arcs) {
  Digraph d(n);
  for (auto [u, v] : arcs) {
    d.check_vertex(u);
    d.check_vertex(v);
    if (u == v)
      throw ParseError(ParseError::Kind::MalformedLine,
                       "self-loop at vertex " + std::to_string(u));
    if (d.out_[u].contains(v))
      throw ParseError(ParseError::Kind::DuplicateArc,
                       "duplicate arc " + std::to_string(u) + " " + std::to_string(v));
    d.out_[u].insert(v);
    d.in_[v].insert(u);
  }
  return d;
}

std::size_t Digraph::arc_count() const {
  std::size_t c = 0;
  for (const auto& s : out_) c += s.count();
  return c;
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> r;
  for (Vertex u = 0; u < n_; ++u) out_[u].for_each([&](Vertex v) { r.emplace_back(u, v); });
  return r;
}

void Digraph::check_vertex(std::size_t v) const {
  if (v >= n_) throw VertexOutOfRange(v, n_);
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph SimpleGraph::from_edges(std::size_t n,
                                    std::span<const std::pair<Vertex, Vertex>> edges) {
  SimpleGraph g;
  g.n_ = n;
  g.adj_.assign(n, VertexSet(n));
  g.index_.assign(pair_count(n), -1);
  for (auto [a, b] : edges) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b)
      throw ParseError(ParseError::Kind::MalformedLine, "loop at vertex " + std::to_string(a));
    if (g.adj_[a].contains(b))
      throw ParseError(ParseError::Kind::DuplicateArc,
                       "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    g.adj_[a].insert(b);
    g.adj_[b].insert(a);
  }
  for (Vertex u = 0; u < n; ++u) {
    g.adj_[u].for_each([&](Vertex v) {
      if (v > u) {
        g.index_[pair_index(n, u, v)] = static_cast<std::int64_t>(g.edges_.size());
        g.edges_.emplace_back(u, v);
      }
    });
  }
  return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  return from_edges(n, edges);
}

std::optional<std::size_t> SimpleGraph::edge_index(Vertex u, Vertex v) const {
  if (u == v) return std::nullopt;
  if (u > v) std::swap(u, v);
  auto i = index_[pair_index(n_, u, v)];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

void SimpleGraph::check_vertex(std::size_t v) const {
  if (v >= n_) throw VertexOutOfRange(v, n_);
}

// ---------------------------------------------------------------------------

InducedTournament induced_sub(const ColouredTournament& t, std::span<const Vertex> w) {
  std::vector<Vertex> map(w.begin(), w.end());
  for (auto v : map) t.check_vertex(v);
  std::sort(map.begin(), map.end());
  map.erase(std::unique(map.begin(), map.end()), map.end());
  const std::size_t m = map.size();
  std::vector<std::uint8_t> reversed;
  std::vector<Colour> colours;
  reversed.reserve(pair_count(m));
  colours.reserve(pair_count(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      reversed.push_back(t.has_arc(map[j], map[i]) ? 1 : 0);
      colours.push_back(t.pair_colour(map[i], map[j]));
    }
  }
  return {ColouredTournament(m, t.colour_count(), reversed, colours), std::move(map)};
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      auto start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) l.tokens.push_back(line.substr(start, i - start));
    }
    if (!l.tokens.empty()) lines.push_back(std::move(l));
  }
  return lines;
}

std::uint64_t to_uint(std::string_view token, ParseError::Kind kind, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(kind, "line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                               std::string(token) + "'");
  return value;
}

// Validates the header and returns its numeric fields.
std::vector<std::uint64_t> read_header(const std::vector<Line>& lines, std::string_view magic,
                                       std::size_t fields) {
  if (lines.empty() || lines[0].tokens[0] != magic || lines[0].tokens.size() != fields + 1)
    throw ParseError(ParseError::Kind::MalformedHeader,
                     "expected header '" + std::string(magic) + "' with " +
                         std::to_string(fields) + " field(s)");
  std::vector<std::uint64_t> values;
  for (std::size_t i = 1; i <= fields; ++i)
    values.push_back(to_uint(lines[0].tokens[i], ParseError::Kind::MalformedHeader, lines[0].number));
  return values;
}

std::vector<std::pair<Vertex, Vertex>> read_pairs(const std::vector<Line>& lines, std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2)
      throw ParseError(ParseError::Kind::MalformedLine,
                       "line " + std::to_string(l.number) + ": expected 'u v'");
    auto u = to_uint(l.tokens[0], ParseError::Kind::MalformedLine, l.number);
    auto v = to_uint(l.tokens[1], ParseError::Kind::MalformedLine, l.number);
    if (u >= n) throw VertexOutOfRange(u, n);
    if (v >= n) throw VertexOutOfRange(v, n);
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return pairs;
}

}  // namespace

ColouredTournament parse_cdt(std::string_view text) {
  auto lines = tokenize(text);
  auto header = read_header(lines, "cdt", 2);
  const auto n = header[0];
  if (header[1] > UINT32_MAX)
    throw ParseError(ParseError::Kind::MalformedHeader, "colour count too large");
  const auto k = static_cast<Colour>(header[1]);
  if (n > 1'000'000) throw ParseError(ParseError::Kind::MalformedHeader, "vertex count too large");
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 3)
      throw ParseError(ParseError::Kind::MalformedLine,
                       "line " + std::to_string(l.number) + ": expected 'u v c'");
    auto u = to_uint(l.tokens[0], ParseError::Kind::MalformedLine, l.number);
    auto v = to_uint(l.tokens[1], ParseError::Kind::MalformedLine, l.number);
    auto c = to_uint(l.tokens[2], ParseError::Kind::MalformedLine, l.number);
    if (u >= n) throw VertexOutOfRange(u, n);
    if (v >= n) throw VertexOutOfRange(v, n);
    if (c >= k)
      throw ParseError(ParseError::Kind::ColourOutOfRange,
                       "line " + std::to_string(l.number) + ": colour " + std::to_string(c) +
                           " out of range for k=" + std::to_string(k));
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Colour>(c)});
  }
  return ColouredTournament::from_arcs(n, k, arcs);
}

std::string serialize_cdt(const ColouredTournament& t) {
  std::ostringstream out;
  out << "cdt " << t.order() << ' ' << t.colour_count() << '\n';
  for (const auto& a : t.arcs()) out << a.from << ' ' << a.to << ' ' << a.colour << '\n';
  return out.str();
}

std::vector<ColouredTournament> parse_cdt_stream(std::string_view text) {
  std::vector<ColouredTournament> records;
  std::string chunk;
  bool has_content = false;
  auto flush = [&] {
    if (has_content) records.push_back(parse_cdt(chunk));
    chunk.clear();
    has_content = false;
  };
  while (!text.empty()) {
    auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      flush();
      continue;
    }
    if (line.front() != '#') has_content = true;
    chunk.append(line);
    chunk.push_back('\n');
  }
  flush();
  return records;
}

Digraph parse_dg(std::string_view text) {
  auto lines = tokenize(text);
  auto n = read_header(lines, "dg", 1)[0];
  if (n > 1'000'000) throw ParseError(ParseError::Kind::MalformedHeader, "vertex count too large");
  return Digraph::from_arcs(n, read_pairs(lines, n));
}

std::string serialize_dg(const Digraph& d) {
  std::ostringstream out;
  out << "dg " << d.order() << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

SimpleGraph parse_ug(std::string_view text) {
  auto lines = tokenize(text);
  auto n = read_header(lines, "ug", 1)[0];
  if (n > 1'000'000) throw ParseError(ParseError::Kind::MalformedHeader, "vertex count too large");
  auto edges = read_pairs(lines, n);
  for (auto [u, v] : edges)
    if (u >= v)
      throw ParseError(ParseError::Kind::MalformedLine,
                       "edge " + std::to_string(u) + " " + std::to_string(v) + " must have u < v");
  return SimpleGraph::from_edges(n, edges);
}

std::string serialize_ug(const SimpleGraph& g) {
  std::ostringstream out;
  out << "ug " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace monopath

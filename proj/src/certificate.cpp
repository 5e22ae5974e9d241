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

#include "monopath/certificate.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>

#include <openssl/evp.h>

#include "monopath/error.hpp"
#include "monopath/reach.hpp"

namespace monopath {

using nlohmann::json;

std::string input_digest(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  std::string hex = "sha256:";
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

json duo_certificate(const Duo& d, const std::string& digest) {
  return {{"type", "duo"}, {"K", d.kings}, {"S", d.serfs}, {"input_digest", digest}};
}

json embedding_certificate(const Embedding& e, const std::string& digest) {
  json arcs = json::array();
  for (auto [i, j] : e.pattern.arcs()) arcs.push_back({i, j});
  return {{"type", "embedding"},
          {"pattern", {{"order", e.pattern.order()}, {"arcs", arcs}}},
          {"images", e.images},
          {"input_digest", digest}};
}

json absorbing_certificate(const std::vector<Vertex>& s, const std::string& digest) {
  return {{"type", "absorbing"}, {"S", s}, {"input_digest", digest}};
}

json quasi_kernel_certificate(const std::vector<Vertex>& k, const std::string& digest) {
  return {{"type", "quasi-kernel"}, {"K", k}, {"input_digest", digest}};
}

json partition_duo_certificate(const PartitionDuo& p, const std::string& digest) {
  return {{"type", "partition-duo"}, {"K", p.kernel}, {"S", p.sink}, {"input_digest", digest}};
}

json ramsey_witness_certificate(const SimpleGraph& g, Colour k, const SimpleGraph& motif,
                                const EdgeColouring& colouring, const std::string& digest) {
  json lines = json::array();
  for (std::size_t e = 0; e < colouring.size(); ++e)
    lines.push_back({g.edges()[e].first, g.edges()[e].second, colouring[e]});
  json motif_edges = json::array();
  for (auto [a, b] : motif.edges()) motif_edges.push_back({a, b});
  return {{"type", "witness-colouring"},
          {"check", "ramsey"},
          {"k", k},
          {"motif", {{"order", motif.order()}, {"edges", motif_edges}}},
          {"colouring", lines},
          {"input_digest", digest}};
}

json triangle_witness_certificate(const PatternTournament& p, Colour k, const EdgeColouring& colouring,
                                  const std::string& digest) {
  json lines = json::array();
  std::size_t pos = 0;
  for (Vertex i = 0; i < p.order(); ++i)
    for (Vertex j = i + 1; j < p.order(); ++j, ++pos) {
      if (p.has_arc(i, j))
        lines.push_back({i, j, colouring[pos]});
      else
        lines.push_back({j, i, colouring[pos]});
    }
  return {{"type", "witness-colouring"},
          {"check", "lemma5"},
          {"k", k},
          {"colouring", lines},
          {"input_digest", digest}};
}

namespace {

Verification pass() { return {true, "ok"}; }
Verification fail(std::string why) { return {false, std::move(why)}; }

std::vector<Vertex> vertex_list(const json& cert, const char* field, std::size_t n) {
  auto list = cert.at(field).get<std::vector<Vertex>>();
  for (auto v : list)
    if (v >= n) throw VertexOutOfRange(v, n);
  return list;
}

bool pairwise_disjoint(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
  if (std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

bool contains(const std::vector<Vertex>& list, Vertex v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

Verification check_duo(const ColouredTournament& t, const json& cert) {
  const auto kings = vertex_list(cert, "K", t.order());
  const auto serfs = vertex_list(cert, "S", t.order());
  if (!pairwise_disjoint(kings, serfs)) return fail("K and S are not disjoint sets");
  for (Vertex v = 0; v < t.order(); ++v) {
    bool covered = contains(kings, v) || contains(serfs, v);
    for (auto x : kings) covered = covered || mono_reach_within(t, x, v, 2);
    for (auto y : serfs) covered = covered || mono_reach_within(t, v, y, 2);
    if (!covered) return fail("vertex " + std::to_string(v) + " is not covered");
  }
  return pass();
}

Verification check_embedding(const ColouredTournament& t, const json& cert) {
  const auto images = vertex_list(cert, "images", t.order());
  const auto& pattern = cert.at("pattern");
  const auto m = pattern.at("order").get<std::size_t>();
  if (images.size() != m) return fail("image count differs from pattern order");
  if (!pairwise_disjoint(images, {})) return fail("images are not distinct");
  std::vector<std::uint8_t> seen(m * m, 0);
  for (const auto& arc : pattern.at("arcs")) {
    const auto i = arc.at(0).get<std::size_t>(), j = arc.at(1).get<std::size_t>();
    if (i >= m || j >= m || i == j) return fail("pattern arc out of range");
    if (seen[i * m + j] || seen[j * m + i]) return fail("pattern pair listed twice");
    seen[i * m + j] = 1;
    const auto u = images[i], v = images[j];
    if (!t.has_arc(u, v))
      return fail("host arc " + std::to_string(u) + "->" + std::to_string(v) + " missing");
    if (mono_reach_within(t, v, u, 2))
      return fail("host arc " + std::to_string(u) + "->" + std::to_string(v) + " is not forbidding");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!seen[i * m + j] && !seen[j * m + i]) return fail("pattern is not complete");
  return pass();
}

Verification check_absorbing(const ColouredTournament& t, const json& cert) {
  const auto s = vertex_list(cert, "S", t.order());
  for (Vertex v = 0; v < t.order(); ++v) {
    bool absorbed = false;
    for (auto y : s) absorbed = absorbed || mono_reach_any(t, v, y);
    if (!absorbed) return fail("vertex " + std::to_string(v) + " reaches no member of S");
  }
  return pass();
}

// Uncoloured paths of at most two arcs.
bool within_two(const Digraph& d, Vertex from, Vertex to) {
  if (from == to || d.has_arc(from, to)) return true;
  for (Vertex w = 0; w < d.order(); ++w)
    if (d.has_arc(from, w) && d.has_arc(w, to)) return true;
  return false;
}

bool independent(const Digraph& d, const std::vector<Vertex>& set) {
  for (auto a : set)
    for (auto b : set)
      if (a != b && d.has_arc(a, b)) return false;
  return true;
}

Verification check_quasi_kernel(const Digraph& d, const json& cert) {
  const auto k = vertex_list(cert, "K", d.order());
  if (!independent(d, k)) return fail("K is not independent");
  for (Vertex v = 0; v < d.order(); ++v) {
    bool covered = false;
    for (auto x : k) covered = covered || within_two(d, x, v);
    if (!covered) return fail("vertex " + std::to_string(v) + " is not reached from K");
  }
  return pass();
}

Verification check_partition_duo(const Digraph& d, const json& cert) {
  const auto k = vertex_list(cert, "K", d.order());
  const auto s = vertex_list(cert, "S", d.order());
  if (!pairwise_disjoint(k, s)) return fail("K and S are not disjoint sets");
  if (!independent(d, k) || !independent(d, s)) return fail("K or S is not independent");
  for (Vertex v = 0; v < d.order(); ++v) {
    bool covered = false;
    for (auto x : k) covered = covered || within_two(d, x, v);
    for (auto y : s) covered = covered || within_two(d, v, y);
    if (!covered) return fail("vertex " + std::to_string(v) + " is not covered");
  }
  return pass();
}

// Colour lookup by unordered pair for a listed colouring.
std::vector<std::int64_t> read_colouring(const json& lines, std::size_t n, Colour k) {
  std::vector<std::int64_t> colour(n * n, -1);
  for (const auto& line : lines) {
    const auto u = line.at(0).get<Vertex>(), v = line.at(1).get<Vertex>();
    const auto c = line.at(2).get<Colour>();
    if (u >= n) throw VertexOutOfRange(u, n);
    if (v >= n) throw VertexOutOfRange(v, n);
    if (c >= k) throw ParseError(ParseError::Kind::ColourOutOfRange, "witness colour out of range");
    if (colour[u * n + v] >= 0) throw ParseError(ParseError::Kind::DuplicateArc, "pair coloured twice");
    colour[u * n + v] = colour[v * n + u] = c;
  }
  return colour;
}

Verification check_ramsey_witness(const SimpleGraph& g, const json& cert) {
  const auto k = cert.at("k").get<Colour>();
  const auto n = g.order();
  const auto colour = read_colouring(cert.at("colouring"), n, k);
  for (auto [u, v] : g.edges())
    if (colour[u * n + v] < 0) return fail("edge " + std::to_string(u) + " " + std::to_string(v) + " uncoloured");
  for (std::size_t i = 0; i < n * n; ++i)
    if (colour[i] >= 0 && !g.adjacent(static_cast<Vertex>(i / n), static_cast<Vertex>(i % n)))
      return fail("colouring lists a non-edge");

  const auto& motif = cert.at("motif");
  const auto h = motif.at("order").get<std::size_t>();
  std::vector<std::uint8_t> motif_adj(h * h, 0);
  for (const auto& e : motif.at("edges")) {
    const auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
    if (a >= h || b >= h || a == b) return fail("motif edge out of range");
    motif_adj[a * h + b] = motif_adj[b * h + a] = 1;
  }
  if (h > n) return pass();

  // Every injective placement of the motif vertices.
  std::vector<Vertex> place(h);
  std::vector<std::uint8_t> used(n, 0);
  bool found = false;
  auto consistent = [&](std::size_t depth) {
    for (std::size_t i = 0; i < depth; ++i)
      if (motif_adj[i * h + depth] != (g.adjacent(place[i], place[depth]) ? 1 : 0)) return false;
    return true;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (found) return;
    if (depth == h) {
      std::int64_t shared = -1;
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j) {
          if (!motif_adj[i * h + j]) continue;
          const auto c = colour[place[i] * n + place[j]];
          if (shared >= 0 && c != shared) return;
          shared = c;
        }
      found = true;
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      place[depth] = v;
      if (!consistent(depth)) continue;
      used[v] = 1;
      self(self, depth + 1);
      used[v] = 0;
    }
  };
  recurse(recurse, 0);
  if (found) return fail("colouring contains a monochromatic induced motif");
  return pass();
}

Verification check_triangle_witness(const ColouredTournament& pattern, const json& cert) {
  const auto k = cert.at("k").get<Colour>();
  const auto n = pattern.order();
  std::vector<std::int64_t> colour(n * n, -1);
  for (const auto& line : cert.at("colouring")) {
    const auto u = line.at(0).get<Vertex>(), v = line.at(1).get<Vertex>();
    const auto c = line.at(2).get<Colour>();
    if (u >= n) throw VertexOutOfRange(u, n);
    if (v >= n) throw VertexOutOfRange(v, n);
    if (c >= k) throw ParseError(ParseError::Kind::ColourOutOfRange, "witness colour out of range");
    if (!pattern.has_arc(u, v)) return fail("colouring lists a non-arc");
    if (colour[u * n + v] >= 0) throw ParseError(ParseError::Kind::DuplicateArc, "arc coloured twice");
    colour[u * n + v] = c;
  }
  for (const auto& a : pattern.arcs())
    if (colour[a.from * n + a.to] < 0) return fail("arc left uncoloured");
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = 0; c < n; ++c) {
        if (!pattern.has_arc(a, b) || !pattern.has_arc(b, c) || !pattern.has_arc(c, a)) continue;
        const auto x = colour[a * n + b], y = colour[b * n + c], z = colour[c * n + a];
        if (x == y || y == z || x == z) return fail("colouring has a quasi-monochromatic triangle");
      }
  return pass();
}

std::string_view header_word(std::string_view text) {
  while (!text.empty()) {
    auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos || line[start] == '#') continue;
    line.remove_prefix(start);
    return line.substr(0, line.find_first_of(" \t\r"));
  }
  return {};
}

Verification dispatch(std::string_view instance_text, const json& cert) {
  const auto type = cert.at("type").get<std::string>();
  if (cert.contains("input_digest") && cert.at("input_digest").get<std::string>() != input_digest(instance_text))
    return fail("input digest does not match the instance");
  const auto format = header_word(instance_text);

  auto need = [&](std::string_view expected) {
    if (format != expected)
      throw ParseError(ParseError::Kind::MalformedHeader,
                       "certificate type '" + type + "' needs a '" + std::string(expected) + "' instance");
  };
  if (type == "duo") {
    need("cdt");
    return check_duo(parse_cdt(instance_text), cert);
  }
  if (type == "embedding") {
    need("cdt");
    return check_embedding(parse_cdt(instance_text), cert);
  }
  if (type == "absorbing") {
    need("cdt");
    return check_absorbing(parse_cdt(instance_text), cert);
  }
  if (type == "quasi-kernel") {
    need("dg");
    return check_quasi_kernel(parse_dg(instance_text), cert);
  }
  if (type == "partition-duo") {
    need("dg");
    return check_partition_duo(parse_dg(instance_text), cert);
  }
  if (type == "witness-colouring") {
    const auto check = cert.at("check").get<std::string>();
    if (check == "ramsey") {
      need("ug");
      return check_ramsey_witness(parse_ug(instance_text), cert);
    }
    if (check == "lemma5") {
      need("cdt");
      return check_triangle_witness(parse_cdt(instance_text), cert);
    }
    throw Error("unknown witness check '" + check + "'");
  }
  throw Error("unknown certificate type '" + type + "'");
}

}  // namespace

Verification verify_certificate(std::string_view instance_text, const json& cert) {
  try {
    return dispatch(instance_text, cert);
  } catch (const VertexOutOfRange& e) {
    return fail(e.what());
  }
}

}  // namespace monopath

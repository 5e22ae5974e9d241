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

// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monopath/bound.hpp"
#include "monopath/cli.hpp"
#include "monopath/duo.hpp"
#include "monopath/enumgen.hpp"
#include "monopath/kernels.hpp"
#include "monopath/ramsey.hpp"
#include "monopath/reach.hpp"
#include "oracles.hpp"

using namespace monopath;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome bad(std::string detail) { return {false, std::move(detail)}; }

// Independent of the library's reachability code: DFS over simple monochromatic paths.
bool absorbing_vertex(const ColouredTournament& t, Vertex w) {
  for (Vertex v = 0; v < t.order(); ++v)
    if (!oracle::reaches(t, v, w)) return false;
  return true;
}

// Forbidding by definition: no monochromatic path of length at most two from v back to u.
bool forbidding_by_definition(const ColouredTournament& t, Vertex u, Vertex v) {
  return t.has_arc(u, v) && !oracle::path_exists(t, v, u, 2);
}

Outcome f1_is_one() {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_tournaments(n, true)) {
      const auto r = min_absorbing(t);
      if (r.size != 1 || !absorbing_vertex(t, r.witness.front()))
        return bad("n=" + std::to_string(n) + " instance has minimum " + std::to_string(r.size));
      ++checked;
    }
  return ok(std::to_string(checked) + " canonical tournaments");
}

Outcome two_colour_absorbing_vertex() {
  std::size_t checked = 0;
  auto check = [&](const ColouredTournament& t) {
    const auto r = min_absorbing(t);
    ++checked;
    return r.size == 1 && absorbing_vertex(t, r.witness.front());
  };
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& o : enumerate_tournaments(n, false))
      for (const auto& t : enumerate_colourings(o, 2))
        if (!check(t)) return bad("exception at n=" + std::to_string(n) + ":\n" + serialize_cdt(t));
  for (const auto& o : enumerate_tournaments(5, true))
    for (const auto& t : enumerate_colourings(o, 2))
      if (!check(t)) return bad("exception at n=5:\n" + serialize_cdt(t));
  return ok(std::to_string(checked) + " coloured tournaments, zero exceptions");
}

Outcome rainbow_triangle() {
  const auto rainbow = oracle::rainbow_c3();
  if (min_absorbing(rainbow).size != 2 || oracle::min_absorbing(rainbow).size() != 2)
    return bad("rainbow triangle minimum is not 2");

  std::ostringstream out, err;
  const int code = run({"search-f", "-k", "3", "-n", "3", "--target", "1"}, out, err);
  if (code != exit_code::verified) return bad("search-f exited " + std::to_string(code));
  const auto text = out.str();
  const auto begin = text.find("cdt ");
  const auto end = text.find("certificate ");
  if (begin == std::string::npos || end == std::string::npos || end < begin) return bad("no instance in output");
  const auto found = parse_cdt(text.substr(begin, end - begin));
  if (found.order() != 3 || found.colour_count() != 3) return bad("unexpected instance shape");
  std::set<Colour> colours;
  for (const auto& a : found.arcs()) colours.insert(a.colour);
  const bool cyclic = (found.has_arc(0, 1) && found.has_arc(1, 2) && found.has_arc(2, 0)) ||
                      (found.has_arc(1, 0) && found.has_arc(2, 1) && found.has_arc(0, 2));
  if (!cyclic || colours.size() != 3) return bad("search-f did not return a rainbow directed triangle");
  if (oracle::min_absorbing(found).size() != 2) return bad("found instance has oracle minimum != 2");
  return ok("minimum 2; search-f returned a rainbow directed triangle");
}

Outcome forbidding_invariants() {
  Rng rng(Seed{20260401});
  std::size_t instances = 0, arcs_checked = 0, triangles = 0;
  for (; instances < 1000; ++instances) {
    const auto n = 1 + rng.below(40);
    const auto k = static_cast<Colour>(1 + rng.below(5));
    const auto t = random_instance(n, k, rng);
    const auto f = forbidding_edges(t);

    // (a) a random vertex subset keeping each sampled forbidding arc.
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (rng.coin()) keep.push_back(v);
    const auto sub = induced_sub(t, keep);
    const auto fs = forbidding_edges(sub.tournament);
    for (Vertex i = 0; i < sub.map.size(); ++i)
      for (Vertex j = 0; j < sub.map.size(); ++j)
        if (i != j && f.contains(sub.map[i], sub.map[j])) {
          ++arcs_checked;
          if (!fs.contains(i, j)) return bad("(a) violated at instance " + std::to_string(instances));
        }

    // (b), (c) over every directed triangle found by brute force.
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        for (Vertex c = 0; c < n; ++c) {
          if (!(a < b && a < c && b != c)) continue;
          if (!(t.has_arc(a, b) && t.has_arc(b, c) && t.has_arc(c, a))) continue;
          const Colour x = *t.arc_colour(a, b), y = *t.arc_colour(b, c), z = *t.arc_colour(c, a);
          if (x == y && y == z) {
            ++triangles;
            if (f.contains(a, b) || f.contains(b, c) || f.contains(c, a))
              return bad("(b) violated at instance " + std::to_string(instances));
          } else if (x == y || y == z || x == z) {
            ++triangles;
            const auto [p, q] = x == y ? std::pair{c, a} : y == z ? std::pair{a, b} : std::pair{b, c};
            if (f.contains(p, q)) return bad("(c) violated at instance " + std::to_string(instances));
          }
        }
  }
  return ok(std::to_string(instances) + " instances, " + std::to_string(arcs_checked) + " inherited arcs, " +
            std::to_string(triangles) + " quasi-monochromatic triangles");
}

Outcome embed_or_duo_soundness() {
  Rng rng(Seed{20260402});
  std::size_t duos = 0, embeddings = 0;
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    const auto n = 1 + rng.below(60);
    const auto m = 2 + rng.below(5);
    const auto k = static_cast<Colour>(1 + rng.below(4));
    const auto t = random_instance(n, k, rng);
    const auto p = random_pattern(m, rng);
    const auto result = duo_construct(t, p);
    if (const auto* d = std::get_if<Duo>(&result)) {
      ++duos;
      if (!verify_duo(t, *d) || !oracle::covers(t, d->kings, d->serfs) || d->kings.size() + d->serfs.size() > m - 1)
        return bad("unsound duo at trial " + std::to_string(trial));
    } else {
      ++embeddings;
      const auto& e = std::get<Embedding>(result);
      std::set<Vertex> distinct(e.images.begin(), e.images.end());
      if (e.images.size() != m || distinct.size() != m) return bad("non-injective embedding at trial " + std::to_string(trial));
      for (auto [i, j] : p.arcs())
        if (!forbidding_by_definition(t, e.images[i], e.images[j]))
          return bad("embedded arc not forbidding at trial " + std::to_string(trial));
    }
  }
  return ok(std::to_string(duos) + " duos, " + std::to_string(embeddings) + " embeddings");
}

Outcome single_colour_pipeline() {
  const auto p = build_t(SimpleGraph::cycle(5));
  if (!check_quasi_mono_c3_all_colourings(p, 1).holds) return bad("pattern check fails at one colour");
  Rng rng(Seed{20260403});
  std::size_t largest = 0;
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    const auto t = random_instance(1 + rng.below(100), 1, rng);
    const auto result = duo_construct(t, p);
    const auto* d = std::get_if<Duo>(&result);
    if (d == nullptr) return bad("embedding returned at trial " + std::to_string(trial));
    const auto size = d->kings.size() + d->serfs.size();
    if (size > 4 || !oracle::covers(t, d->kings, d->serfs)) return bad("bad duo at trial " + std::to_string(trial));
    largest = std::max(largest, size);
  }
  return ok("1000 duos, largest size " + std::to_string(largest));
}

Outcome bound_arithmetic() {
  const auto two = theorem_bound(2, BoundMode::Finite);
  if (!two.is_exact()) return bad("bound for two colours is not exact");
  mpz_class expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, 125000);
  if (two.exact() != expected) return bad("value differs from 2^125000");
  const auto digits = static_cast<std::size_t>(std::floor(125000.0L * std::log10(2.0L))) + 1;
  const auto printed = two.exact().get_str().size();
  if (decimal_digits(two.exact()) != digits || printed != digits)
    return bad("digit count " + std::to_string(printed) + " vs " + std::to_string(digits));
  const auto one = theorem_bound(1, BoundMode::Finite);
  if (!one.is_exact() || one.exact() != 1) return bad("bound for one colour is not 1");
  return ok("2^125000 has " + std::to_string(digits) + " digits; bound(1) = 1");
}

Outcome odd_cycle_two_path() {
  for (unsigned bits = 0; bits < 32; ++bits) {
    std::vector<std::uint8_t> o(5);
    for (unsigned i = 0; i < 5; ++i) o[i] = (bits >> i) & 1U;
    if (!cycle_has_directed_two_path(o)) return bad("orientation " + std::to_string(bits) + " has none");
    // Same fact on the cycle itself: edge i joins i and i+1, o[i] = 1 reverses it.
    bool found = false;
    for (unsigned i = 0; i < 5; ++i) {
      const unsigned j = (i + 1) % 5;
      const bool forward_i = o[i] == 0, forward_j = o[j] == 0;
      found = found || forward_i == forward_j;
    }
    if (!found) return bad("brute force disagrees at orientation " + std::to_string(bits));
  }
  return ok("32 orientations");
}

Outcome quasi_kernels_exist() {
  Rng rng(Seed{20260404});
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    const auto n = 1 + rng.below(12);
    const auto d = random_digraph(n, rng.unit(), rng);
    const auto q = quasi_kernel(d);
    if (q.empty() || !oracle::independent(d, q)) return bad("not independent at trial " + std::to_string(trial));
    for (Vertex v = 0; v < n; ++v) {
      bool hit = false;
      for (auto x : q) hit = hit || oracle::within_two(d, x, v);
      if (!hit) return bad("vertex uncovered at trial " + std::to_string(trial));
    }
  }
  return ok("1000 digraphs");
}

Outcome absorbing_implications() {
  std::size_t gs_holds = 0, mg_holds = 0, total = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& o : enumerate_tournaments(n, false))
      for (Colour k = 1; k <= 3; ++k)
        for (const auto& t : enumerate_colourings(o, k)) {
          ++total;
          const bool gs = gs_condition(t), mg = minggang_condition(t);
          if (!gs && !mg) continue;
          gs_holds += gs;
          mg_holds += mg;
          if (min_absorbing(t).size != 1) return bad("exception:\n" + serialize_cdt(t));
        }
  return ok(std::to_string(total) + " instances; predicate held " + std::to_string(gs_holds) + " / " +
            std::to_string(mg_holds) + " times");
}

Outcome oracle_equivalence() {
  std::size_t checked = 0;
  auto check = [&](const ColouredTournament& t) {
    ++checked;
    const auto duo = min_duo(t).witness;
    const auto naive = oracle::min_duo(t);
    if (duo.kings != naive.kings || duo.serfs != naive.serfs) return false;
    return min_absorbing(t).size == oracle::min_absorbing(t).size();
  };
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& o : enumerate_tournaments(n, true))
      for (Colour k = 1; k <= 2; ++k)
        for (const auto& t : enumerate_colourings(o, k))
          if (!check(t)) return bad("mismatch:\n" + serialize_cdt(t));
  Rng rng(Seed{20260405});
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = random_instance(1 + rng.below(8), 3, rng);
    if (!check(t)) return bad("mismatch:\n" + serialize_cdt(t));
  }
  return ok(std::to_string(checked) + " instances");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"single colour: absorbing vertex on canonical n<=6", f1_is_one},
      {"two colours: absorbing vertex, exhaustive n<=5", two_colour_absorbing_vertex},
      {"three colours: rainbow triangle needs two vertices", rainbow_triangle},
      {"forbidding-arc invariants on random instances", forbidding_invariants},
      {"embed-or-duo soundness on random pairs", embed_or_duo_soundness},
      {"single colour pipeline with the 5-cycle pattern", single_colour_pipeline},
      {"bound arithmetic", bound_arithmetic},
      {"directed two-path in every 5-cycle orientation", odd_cycle_two_path},
      {"quasi-kernels on random digraphs", quasi_kernels_exist},
      {"triangle and triple conditions imply an absorbing vertex", absorbing_implications},
      {"min_duo and min_absorbing match naive oracles", oracle_equivalence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = bad(std::string("exception: ") + e.what());
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !r.pass;
    std::printf("%s %zu %s [%s] (%.2fs)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                r.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}

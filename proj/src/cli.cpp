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

#include "monopath/cli.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monopath/bound.hpp"
#include "monopath/certificate.hpp"
#include "monopath/duo.hpp"
#include "monopath/enumgen.hpp"
#include "monopath/error.hpp"
#include "monopath/kernels.hpp"
#include "monopath/ramsey.hpp"
#include "monopath/reach.hpp"

namespace monopath {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

/// The pattern of the single-colour case: build_t of the 5-cycle.
PatternTournament builtin_t1() { return build_t(SimpleGraph::cycle(5)); }

/// A pattern given as "builtin:t1" or a .cdt file; returns the instance text.
std::pair<PatternTournament, std::string> load_pattern(const std::string& spec) {
  if (spec == "builtin:t1") {
    auto p = builtin_t1();
    return {p, serialize_cdt(p.as_tournament())};
  }
  auto text = read_file(spec);
  return {PatternTournament::from_tournament(parse_cdt(text)), text};
}

/// A motif given as a .ug file or a builtin cycle name "cN".
SimpleGraph load_motif(const std::string& spec) {
  std::smatch m;
  static const std::regex cycle_name("c([0-9]+)");
  if (std::ifstream(spec).good()) return parse_ug(read_file(spec));
  if (std::regex_match(spec, m, cycle_name)) {
    const auto len = std::stoul(m[1]);
    if (len < 3) throw Error("cycle motif needs at least 3 vertices");
    return SimpleGraph::cycle(len);
  }
  throw Error("motif '" + spec + "' is neither a file nor a builtin cN");
}

class Report {
 public:
  Report(std::ostream& out, bool json_mode, std::string cert_out)
      : out_(out), json_mode_(json_mode), cert_out_(std::move(cert_out)) {}

  template <typename T>
  void field(const std::string& key, const T& value, const std::string& text) {
    summary_[key] = value;
    if (!json_mode_) out_ << key << ' ' << text << '\n';
  }
  template <typename T>
  void field(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    field(key, value, s.str());
  }
  void list(const std::string& key, const std::vector<Vertex>& vs) { field(key, vs, join(vs)); }
  void flag(const std::string& key, bool value) { field(key, value, value ? "true" : "false"); }

  void certificate(const json& cert) {
    summary_["certificate"] = cert;
    if (!cert_out_.empty()) {
      std::ofstream f(cert_out_);
      if (!f) throw Error("cannot write '" + cert_out_ + "'");
      f << cert.dump() << '\n';
    }
    if (!json_mode_) out_ << "certificate " << cert.dump() << '\n';
  }

  /// Raw text appended in text mode, stored under `key` in JSON mode.
  void block(const std::string& key, const std::string& text) {
    summary_[key] = text;
    if (!json_mode_) out_ << text;
  }

  void finish() {
    if (json_mode_) out_ << summary_.dump() << '\n';
  }

 private:
  std::ostream& out_;
  bool json_mode_;
  std::string cert_out_;
  json summary_ = json::object();
};

EdgeColouring decode_first_fixed(std::uint64_t index, std::size_t length, Colour k) {
  EdgeColouring c(length, 0);
  for (std::size_t pos = length; pos > 1; --pos) {
    c[pos - 1] = static_cast<Colour>(index % k);
    index /= k;
  }
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monochromatic path machinery for edge-coloured tournaments", "monopath"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned jobs = 1;
  bool json_mode = false;
  std::string cert_out;
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1U, 1024U));
  app.add_flag("--json", json_mode, "JSON summaries");
  app.add_option("--cert-out", cert_out, "also write the certificate to this file");

  std::string input, pattern_spec, motif_spec, cert_path;
  std::size_t cap = 0, n = 0, target = 0;
  Colour k = 0;
  std::uint64_t seed = 0;
  bool canonical = false, finite = false, fix_first = false;

  auto* analyze = app.add_subcommand("analyze", "summary of a coloured tournament");
  analyze->add_option("instance", input, ".cdt file")->required();

  auto* min_duo_cmd = app.add_subcommand("min-duo", "exact minimum king-serf duo");
  min_duo_cmd->add_option("instance", input, ".cdt file")->required();
  auto* cap_opt = min_duo_cmd->add_option("--cap", cap, "largest size to try");

  auto* construct = app.add_subcommand("duo-construct", "embed a pattern into forbidding arcs or return a duo");
  construct->add_option("instance", input, ".cdt file")->required();
  construct->add_option("--pattern", pattern_spec, ".cdt file or builtin:t1")->required();

  auto* absorbing = app.add_subcommand("min-absorbing", "minimum absorbing set");
  absorbing->add_option("instance", input, ".cdt file")->required();

  auto* qk = app.add_subcommand("quasi-kernel", "smallest quasi-kernel of a digraph");
  qk->add_option("instance", input, ".dg file")->required();

  auto* pd = app.add_subcommand("partition-duo", "minimum quasi-kernel/quasi-sink pair of a digraph");
  pd->add_option("instance", input, ".dg file")->required();

  auto* gs = app.add_subcommand("gs-check", "every directed 3- and 4-cycle quasi-monochromatic?");
  gs->add_option("instance", input, ".cdt file")->required();

  auto* mg = app.add_subcommand("minggang-check", "no triple spanning three colours?");
  mg->add_option("instance", input, ".cdt file")->required();

  auto* bt = app.add_subcommand("build-t", "orient a graph forward, non-edges backward");
  bt->add_option("graph", input, ".ug file")->required();

  auto* rc = app.add_subcommand("ramsey-check", "every k-colouring has a monochromatic induced motif?");
  rc->add_option("graph", input, ".ug file")->required();
  rc->add_option("-k", k, "colours")->required()->check(CLI::PositiveNumber);
  rc->add_option("--motif", motif_spec, ".ug file or cN")->required();

  auto* l5 = app.add_subcommand("lemma5-check", "every k-colouring has a quasi-monochromatic directed triangle?");
  l5->add_option("pattern", input, ".cdt file or builtin:t1")->required();
  l5->add_option("-k", k, "colours")->required()->check(CLI::PositiveNumber);

  auto* en = app.add_subcommand("enumerate", "stream tournaments as .cdt records");
  en->add_option("-n", n, "vertices")->required();
  auto* en_k = en->add_option("-k", k, "also enumerate every k-colouring")->check(CLI::PositiveNumber);
  en->add_flag("--canonical", canonical, "one tournament per isomorphism class");
  en->add_flag("--fix-first", fix_first, "fix the first arc's colour to 0");

  auto* rnd = app.add_subcommand("random", "seeded random coloured tournament");
  rnd->add_option("-n", n, "vertices")->required();
  rnd->add_option("-k", k, "colours")->required()->check(CLI::PositiveNumber);
  rnd->add_option("--seed", seed, "seed")->required();

  auto* sf = app.add_subcommand("search-f", "find a tournament whose minimum absorbing set exceeds a target");
  sf->add_option("-k", k, "colours")->required()->check(CLI::PositiveNumber);
  sf->add_option("-n", n, "vertices")->required()->check(CLI::Range(1, 7));
  sf->add_option("--target", target, "size to exceed")->required();

  auto* bd = app.add_subcommand("bound", "duo size bound for k colours");
  bd->add_option("-k", k, "colours")->required()->check(CLI::PositiveNumber);
  bd->add_flag("--finite", finite, "k^(62500k) instead of exp_10(k)");

  auto* vf = app.add_subcommand("verify", "re-check a certificate against an instance");
  vf->add_option("instance", input, "instance file")->required();
  vf->add_option("--cert", cert_path, "certificate JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::verified;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return exit_code::usage;
  }

  Report report(out, json_mode, cert_out);
  try {
    if (analyze->parsed()) {
      const auto text = read_file(input);
      const auto t = parse_cdt(text);
      const auto forbidding = forbidding_edges(t);
      const auto triangles = quasi_mono_triangles(t);
      report.field("n", t.order());
      report.field("k", t.colour_count());
      report.field("forbidding_arcs", forbidding.size());
      json arcs = json::array();
      std::string arc_text;
      for (auto [u, v] : forbidding.arcs()) {
        arcs.push_back({u, v});
        arc_text += (arc_text.empty() ? "" : " ") + std::to_string(u) + "->" + std::to_string(v);
      }
      report.field("forbidding", arcs, arc_text);
      report.field("quasi_mono_triangles", triangles.size());
      report.flag("gs_condition", gs_condition(t));
      report.flag("minggang_condition", minggang_condition(t));
      report.field("input_digest", input_digest(text));
      report.finish();
      return exit_code::verified;
    }

    if (min_duo_cmd->parsed()) {
      const auto text = read_file(input);
      const auto t = parse_cdt(text);
      std::optional<std::size_t> size_cap;
      if (cap_opt->count() > 0) size_cap = cap;
      try {
        const auto result = min_duo(t, size_cap, jobs);
        report.field("size", result.size);
        report.list("K", result.witness.kings);
        report.list("S", result.witness.serfs);
        report.certificate(duo_certificate(result.witness, input_digest(text)));
        report.finish();
        return exit_code::verified;
      } catch (const NotFoundWithinCap& e) {
        report.field("result", std::string("none"), e.what());
        report.finish();
        return exit_code::property_fails;
      }
    }

    if (construct->parsed()) {
      const auto text = read_file(input);
      const auto t = parse_cdt(text);
      const auto [pattern, pattern_text] = load_pattern(pattern_spec);
      const auto result = duo_construct(t, pattern);
      if (const auto* d = std::get_if<Duo>(&result)) {
        report.field("result", std::string("duo"), "duo");
        report.field("size", d->size());
        report.list("K", d->kings);
        report.list("S", d->serfs);
        report.certificate(duo_certificate(*d, input_digest(text)));
      } else {
        const auto& e = std::get<Embedding>(result);
        report.field("result", std::string("embedding"), "embedding");
        report.list("images", e.images);
        report.certificate(embedding_certificate(e, input_digest(text)));
      }
      report.finish();
      return exit_code::verified;
    }

    if (absorbing->parsed()) {
      const auto text = read_file(input);
      const auto result = min_absorbing(parse_cdt(text));
      report.field("size", result.size);
      report.list("witness", result.witness);
      report.certificate(absorbing_certificate(result.witness, input_digest(text)));
      report.finish();
      return exit_code::verified;
    }

    if (qk->parsed()) {
      const auto text = read_file(input);
      const auto kernel = quasi_kernel(parse_dg(text));
      report.field("size", kernel.size());
      report.list("K", kernel);
      report.certificate(quasi_kernel_certificate(kernel, input_digest(text)));
      report.finish();
      return exit_code::verified;
    }

    if (pd->parsed()) {
      const auto text = read_file(input);
      const auto duo = quasi_partition_duo(parse_dg(text));
      report.field("size", duo.kernel.size() + duo.sink.size());
      report.list("K", duo.kernel);
      report.list("S", duo.sink);
      report.certificate(partition_duo_certificate(duo, input_digest(text)));
      report.finish();
      return exit_code::verified;
    }

    if (gs->parsed()) {
      const auto violation = gs_violation(parse_cdt(read_file(input)));
      report.flag("holds", !violation);
      if (violation) report.list("cycle", *violation);
      report.finish();
      return violation ? exit_code::property_fails : exit_code::verified;
    }

    if (mg->parsed()) {
      const auto violation = minggang_violation(parse_cdt(read_file(input)));
      report.flag("holds", !violation);
      if (violation) report.list("triple", {violation->begin(), violation->end()});
      report.finish();
      return violation ? exit_code::property_fails : exit_code::verified;
    }

    if (bt->parsed()) {
      const auto p = build_t(parse_ug(read_file(input)));
      report.block("pattern", serialize_cdt(p.as_tournament()));
      report.finish();
      return exit_code::verified;
    }

    if (rc->parsed()) {
      const auto text = read_file(input);
      const auto g = parse_ug(text);
      const auto motif = load_motif(motif_spec);
      const auto verdict = ramsey_check(g, k, motif, default_budget(), jobs);
      report.flag("holds", verdict.holds);
      if (!verdict.holds) {
        report.block("witness", serialize_colouring(g, *verdict.witness));
        report.certificate(ramsey_witness_certificate(g, k, motif, *verdict.witness, input_digest(text)));
      }
      report.finish();
      return verdict.holds ? exit_code::verified : exit_code::property_fails;
    }

    if (l5->parsed()) {
      const auto [pattern, text] = load_pattern(input);
      const auto verdict = check_quasi_mono_c3_all_colourings(pattern, k, default_budget(), jobs);
      report.flag("holds", verdict.holds);
      if (!verdict.holds) {
        report.block("witness", serialize_cdt(colour_pattern(pattern, k, *verdict.witness)));
        report.certificate(triangle_witness_certificate(pattern, k, *verdict.witness, input_digest(text)));
      }
      report.finish();
      return verdict.holds ? exit_code::verified : exit_code::property_fails;
    }

    if (en->parsed()) {
      const auto budget = default_budget();
      std::uint64_t orientations = 0;
      if (canonical) {
        if (n > 7) throw Error("canonical enumeration is limited to n <= 7");
      } else {
        orientations = pair_count(n) >= 64 ? UINT64_MAX : saturating_pow(2, pair_count(n));
        check_budget(orientations, budget);
      }
      const auto tournaments = enumerate_tournaments(n, canonical, budget);
      orientations = tournaments.size();
      bool first = true;
      auto emit = [&](const ColouredTournament& t) {
        if (!first) out << '\n';
        first = false;
        out << serialize_cdt(t);
      };
      if (en_k->count() == 0) {
        for (const auto& t : tournaments) emit(t);
      } else {
        const auto pairs = pair_count(n);
        const auto per = saturating_pow(k, fix_first && pairs > 0 ? pairs - 1 : pairs);
        const auto total = per > UINT64_MAX / std::max<std::uint64_t>(orientations, 1) ? UINT64_MAX
                                                                                         : per * orientations;
        check_budget(total, budget);
        for (const auto& t : tournaments) for_each_colouring(t, k, fix_first, emit, budget);
      }
      return exit_code::verified;
    }

    if (rnd->parsed()) {
      out << serialize_cdt(random_instance(n, k, Seed{seed}));
      return exit_code::verified;
    }

    if (sf->parsed()) {
      const auto classes = enumerate_tournaments(n, true);
      const auto pairs = pair_count(n);
      const auto per = pairs == 0 ? 1 : saturating_pow(k, pairs - 1);
      const auto total = per > UINT64_MAX / classes.size() ? UINT64_MAX : per * classes.size();
      check_budget(total, default_budget());
      auto instance = [&](std::uint64_t i) {
        const auto& base = classes[i / per];
        return ColouredTournament(n, k, base.orientation(), decode_first_fixed(i % per, pairs, k));
      };
      auto hit = parallel_find_first(total, jobs, [&](std::uint64_t i) {
        return min_absorbing(instance(i)).size > target;
      });
      if (!hit) {
        report.flag("found", false);
        report.finish();
        return exit_code::property_fails;
      }
      const auto t = instance(*hit);
      const auto text = serialize_cdt(t);
      const auto result = min_absorbing(t);
      report.flag("found", true);
      report.field("min_absorbing", result.size);
      report.list("witness", result.witness);
      report.block("instance", text);
      report.certificate(absorbing_certificate(result.witness, input_digest(text)));
      report.finish();
      return exit_code::verified;
    }

    if (bd->parsed()) {
      const auto b = theorem_bound(k, finite ? BoundMode::Finite : BoundMode::General);
      report.flag("exact", b.is_exact());
      if (b.is_exact()) report.field("digits", decimal_digits(b.exact()));
      report.field("value", b.to_string(), b.to_string());
      report.finish();
      return exit_code::verified;
    }

    if (vf->parsed()) {
      const auto text = read_file(input);
      const auto cert = json::parse(read_file(cert_path));
      const auto result = verify_certificate(text, cert);
      report.flag("verified", result.ok);
      report.field("reason", result.reason, result.reason);
      report.finish();
      return result.ok ? exit_code::verified : exit_code::property_fails;
    }
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return exit_code::budget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const json::exception& e) {
    err << "error: bad certificate: " << e.what() << '\n';
    return exit_code::usage;
  }
  return exit_code::usage;
}

}  // namespace monopath

// Copyright 2026 The pathecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Exit codes: 0 path / dominating path / valid
// certificate, 2 witness or invalid certificate, 1 usage or input error,
// 3 oracle cap exceeded.

#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "pathecc/pathecc.hpp"

namespace pathecc::cli {

enum Exit : int { kOk = 0, kInput = 1, kWitness = 2, kCap = 3 };

namespace detail {

inline std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inline JSON if the text starts with '{' or '[', else a file name.
inline json json_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  std::string body = first != std::string::npos && (text[first] == '{' || text[first] == '[') ? text : slurp(text);
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

struct GraphSource {
  std::string file;
  std::string gen;
  std::uint64_t seed = 0;
  bool seed_given = false;

  Graph load() const {
    if (!file.empty()) return parse_edge_list(slurp(file));
    GenSpec spec = genspec_from_json(json_arg(gen));
    if (seed_given) spec.seed = seed;
    return gen_random(spec);
  }
};

inline void add_source(CLI::App* sub, GraphSource& src) {
  auto* f = sub->add_option("--graph", src.file, "Edge-list file ('-' for stdin)");
  auto* g = sub->add_option("--gen", src.gen, "Generator spec (inline JSON or file)");
  f->excludes(g);
  sub->add_option("--seed", src.seed, "Seed overriding the generator spec")->each([&src](const std::string&) {
    src.seed_given = true;
  });
  sub->callback([f, g] {
    if (f->count() + g->count() != 1) throw CLI::ValidationError("exactly one of --graph and --gen is required");
  });
}

inline std::string describe(const Certificate& c) {
  std::ostringstream out;
  if (const auto* p = std::get_if<PathCert>(&c)) {
    out << "path k=" << p->k << " eccentricity=" << p->eccentricity << ":";
    for (Vertex v : p->path) out << ' ' << v;
  } else {
    const auto& w = std::get<WitnessCert>(c).witness;
    out << "witness " << to_string(w.cls) << " k=" << w.k << " core=" << to_string(w.core.cls) << " extremities=";
    out << w.core.extremities[0] << ',' << w.core.extremities[1] << ',' << w.core.extremities[2];
  }
  return out.str();
}

inline std::vector<Highlight> highlights(const Certificate& c) {
  if (const auto* p = std::get_if<PathCert>(&c)) return {{"path", p->path.vertices()}};
  const auto& w = std::get<WitnessCert>(c).witness;
  std::vector<Vertex> ext;
  for (const auto& e : w.extensions)
    if (e.size() > 1) ext.insert(ext.end(), e.begin() + 1, e.end());
  std::vector<Vertex> ends(w.core.extremities.begin(), w.core.extremities.end());
  return {{"extremities", ends}, {"core", w.core.vertex_set()}, {"extensions", ext}};
}

struct BenchRow {
  std::uint64_t seed = 0;
  Vertex n = 0;
  std::size_t m = 0;
  std::string outcome;
  double wall_ms = 0;
  SolveStats stats;
  std::string error;
};

inline BenchRow bench_trial(const GenSpec& base, int k, std::uint64_t seed) {
  BenchRow row;
  row.seed = seed;
  try {
    GenSpec spec = base;
    spec.seed = seed;
    Graph g = gen_random(spec);
    row.n = g.order();
    row.m = g.size();
    const auto t0 = std::chrono::steady_clock::now();
    Certificate c = solve(g, k, {}, &row.stats);
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    row.outcome = std::holds_alternative<PathCert>(c) ? "path" : "witness";
  } catch (const std::exception& e) {
    row.outcome = "error";
    row.error = e.what();
  }
  return row;
}

}  // namespace detail

/// Runs one invocation; artifacts go to `out`, diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifying path-eccentricity toolkit"};
  app.require_subcommand(1);

  enum class Mode { Json, Text, Dot };
  int k = 0;
  bool trace = false;
  bool double_bfs = false;
  std::string mode_name = "json";
  detail::GraphSource src;

  auto* solve_cmd = app.add_subcommand("solve", "Path of eccentricity < k, or an S_k/T_k/M_k witness");
  solve_cmd->add_option("--k", k, "Eccentricity bound")->required()->check(CLI::Range(1, 1 << 20));
  detail::add_source(solve_cmd, src);
  auto* as_json = solve_cmd->add_flag("--json", "JSON certificate (default)");
  auto* as_dot = solve_cmd->add_flag("--dot", "Graphviz DOT with the certificate highlighted");
  auto* as_text = solve_cmd->add_flag("--text", "One-line summary");
  as_json->excludes(as_dot)->excludes(as_text);
  as_dot->excludes(as_text);
  solve_cmd->add_flag("--trace", trace, "Per-iteration JSON lines on stderr");
  solve_cmd->add_flag("--double-bfs", double_bfs, "Start from a double-BFS endpoint");

  std::vector<Vertex> start_path;
  auto* dom_cmd = app.add_subcommand("dompath", "Dominating path, or an induced 3P_2");
  detail::add_source(dom_cmd, src);
  dom_cmd->add_option("--start-path", start_path, "Initial path (comma separated ids)")->delimiter(',');
  dom_cmd->add_flag("--trace", trace, "Per-step JSON lines on stderr");

  std::string which;
  std::string pattern;
  std::string graph_file;
  Vertex cap = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations (small graphs)");
  oracle_cmd->add_option("which", which, "pe | c1p | kat | induced")
      ->required()
      ->check(CLI::IsMember({"pe", "c1p", "kat", "induced"}));
  oracle_cmd->add_option("--graph", graph_file, "Edge-list file")->required();
  oracle_cmd->add_option("--k", k, "Radius for kat")->check(CLI::Range(1, 1 << 20));
  oracle_cmd->add_option("--pattern", pattern, "Family spec for induced, e.g. SK(2)");
  oracle_cmd->add_option("--cap", cap, "Override the vertex cap")->check(CLI::Range(1, 63));

  std::string cert_file;
  auto* check_cmd = app.add_subcommand("check", "Re-validate a certificate against a graph");
  check_cmd->add_option("--graph", graph_file, "Edge-list file")->required();
  check_cmd->add_option("--cert", cert_file, "Certificate JSON file")->required();

  std::string spec_text;
  std::uint64_t seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated graph as an edge list");
  gen_cmd->add_option("--spec", spec_text, "Generator spec (inline JSON or file)")->required();
  gen_cmd->add_option("--seed", seed, "Seed")->required();

  int trials = 1;
  unsigned workers = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time solve over generated instances");
  bench_cmd->add_option("--spec", spec_text, "Generator spec (inline JSON or file)")->required();
  bench_cmd->add_option("--k", k, "Eccentricity bound")->required()->check(CLI::Range(1, 1 << 20));
  bench_cmd->add_option("--trials", trials, "Number of instances")->check(CLI::Range(1, 1 << 20));
  bench_cmd->add_option("--seed", seed, "Base seed")->required();
  bench_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    out << help.str();
    return code == 0 ? kOk : kInput;
  }

  try {
    if (solve_cmd->parsed()) {
      const Mode mode = as_dot->count() ? Mode::Dot : as_text->count() ? Mode::Text : Mode::Json;
      Graph g = src.load();
      SolveOptions opts;
      opts.double_bfs_start = double_bfs;
      if (trace) opts.trace = [&err](const TraceEvent& e) { err << to_json(e).dump() << '\n'; };
      Certificate c = solve(g, k, opts);
      if (mode == Mode::Json) out << to_json(c).dump() << '\n';
      else if (mode == Mode::Text) out << detail::describe(c) << '\n';
      else out << emit_dot(g, detail::highlights(c));
      return std::holds_alternative<PathCert>(c) ? kOk : kWitness;
    }
    if (dom_cmd->parsed()) {
      Graph g = src.load();
      std::optional<VertexPath> start;
      if (!start_path.empty()) {
        start = VertexPath(start_path);
        if (!start->valid_in(g)) throw InputError("--start-path is not a path in the graph");
      }
      DomTraceSink sink;
      if (trace) sink = [&err](std::size_t step, const StepResult& r) { err << to_json(step, r).dump() << '\n'; };
      DomCertificate c = dominating_path(g, start, nullptr, sink);
      out << to_json(c).dump() << '\n';
      return std::holds_alternative<DomPath>(c) ? kOk : kWitness;
    }
    if (oracle_cmd->parsed()) {
      Graph g = parse_edge_list(detail::slurp(graph_file));
      OracleCaps caps;
      if (cap > 0) caps.path_eccentricity = caps.induced_pattern = caps.star_c1p = cap;
      json res{{"oracle", which}};
      if (which == "pe") {
        auto r = brute_path_eccentricity(g, caps);
        res["eccentricity"] = r.eccentricity;
        res["path"] = r.path.vertices();
      } else if (which == "c1p") {
        auto r = brute_star_c1p(g, caps);
        res["ordering"] = r ? json(*r) : json(nullptr);
      } else if (which == "kat") {
        if (k < 1) throw InputError("kat needs --k");
        auto r = find_k_asteroidal_triple(g, k);
        res["k"] = k;
        res["at_free"] = !r.has_value();
        res["triple"] = r ? json(*r) : json(nullptr);
      } else {
        if (pattern.empty()) throw InputError("induced needs --pattern");
        auto spec = parse_family(pattern);
        auto r = find_induced(g, build_family(spec), caps);
        res["pattern"] = to_string(spec);
        res["embedding"] = r ? json(*r) : json(nullptr);
      }
      out << res.dump() << '\n';
      return kOk;
    }
    if (check_cmd->parsed()) {
      Graph g = parse_edge_list(detail::slurp(graph_file));
      Report r = check_certificate(g, detail::json_arg(detail::slurp(cert_file)));
      json res{{"valid", r.ok}};
      if (!r.ok) res["violation"] = r.violation;
      out << res.dump() << '\n';
      return r.ok ? kOk : kWitness;
    }
    if (gen_cmd->parsed()) {
      GenSpec spec = genspec_from_json(detail::json_arg(spec_text));
      spec.seed = seed;
      out << write_edge_list(gen_random(spec));
      return kOk;
    }
    if (bench_cmd->parsed()) {
      const GenSpec base = genspec_from_json(detail::json_arg(spec_text));
      std::vector<detail::BenchRow> rows(static_cast<std::size_t>(trials));
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < rows.size(); i += workers)
            rows[i] = detail::bench_trial(base, k, CounterRng::derive(seed, i));
        });
      for (auto& t : pool) t.join();
      json arr = json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        json j{{"trial", i},
               {"seed", r.seed},
               {"n", r.n},
               {"m", r.m},
               {"outcome", r.outcome},
               {"wall_ms", r.wall_ms},
               {"outer_iterations", r.stats.outer_iterations},
               {"peak_path_length", r.stats.peak_path_length}};
        if (!r.error.empty()) j["error"] = r.error;
        arr.push_back(std::move(j));
      }
      out << json{{"k", k}, {"spec", to_json(base)}, {"trials", arr}}.dump() << '\n';
      return kOk;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}

}  // namespace pathecc::cli

// Command-line front end: constructions, spectral solves, freeness and
// colorability queries, exhaustive searches, peeling traces, and the named
// consistency suites. Exit codes: 0 ok, 1 invalid input, 2 solver did not
// converge, 3 search cap refused, 4 a verify check failed.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hyturan/constructions.hpp"
#include "hyturan/containment.hpp"
#include "hyturan/io.hpp"
#include "hyturan/pattern.hpp"
#include "hyturan/search.hpp"
#include "hyturan/spectral.hpp"
#include "hyturan/stability.hpp"
#include "hyturan/verify.hpp"

using nlohmann::json;
using namespace hyturan;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitNoConverge = 2;
constexpr int kExitCapRefused = 3;
constexpr int kExitCheckFailed = 4;

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("expected an integer for " + what + ", got '" + tok + "'");
  }
}

// Named builders: turan N L K | b4 N | triangle K | fan K | f4 | f7 |
// matching K T | hyperstar K T.
Hypergraph build_named(const std::vector<std::string>& tok) {
  if (tok.empty()) throw std::invalid_argument("empty construction");
  const std::string& name = tok[0];
  auto want = [&](std::size_t args) {
    if (tok.size() != args + 1)
      throw std::invalid_argument("construction '" + name + "' takes " +
                                  std::to_string(args) + " argument(s)");
  };
  if (name == "turan") {
    want(3);
    return turan_graph(parse_int(tok[1], "n"), parse_int(tok[2], "l"),
                       parse_int(tok[3], "k"));
  }
  if (name == "b4") {
    want(1);
    return bipartite_like_complete(parse_int(tok[1], "n"), 2);
  }
  if (name == "triangle") {
    want(1);
    return generalized_triangle(parse_int(tok[1], "k"));
  }
  if (name == "fan") {
    want(1);
    return generalized_fan(parse_int(tok[1], "k"));
  }
  if (name == "f4") {
    want(0);
    return f4();
  }
  if (name == "f7") {
    want(0);
    return f7();
  }
  if (name == "matching") {
    want(2);
    return matching(parse_int(tok[1], "k"), parse_int(tok[2], "t"));
  }
  if (name == "hyperstar") {
    want(2);
    return hyperstar(parse_int(tok[1], "k"), parse_int(tok[2], "t"));
  }
  throw std::invalid_argument(
      "unknown construction '" + name +
      "' (try: turan, b4, triangle, fan, f4, f7, matching, hyperstar)");
}

// A graph argument is a file path, '-' for stdin, or builder tokens (the
// tokens may arrive as separate arguments or inside one quoted string).
Hypergraph resolve_graph(const std::vector<std::string>& spec) {
  if (spec.empty()) throw std::invalid_argument("missing graph argument");
  if (spec.size() == 1 &&
      (spec[0] == "-" || std::filesystem::exists(spec[0])))
    return load_hypergraph(spec[0]);
  std::vector<std::string> tok;
  for (const std::string& s : spec)
    for (std::string& t : split_ws(s)) tok.push_back(std::move(t));
  return build_named(tok);
}

Hypergraph resolve_graph(const std::string& spec) {
  return resolve_graph(split_ws(spec));
}

// A pattern argument is a JSON file, 'kkl L K', or 'bipartite-like'.
Pattern resolve_pattern(const std::string& spec) {
  std::vector<std::string> tok = split_ws(spec);
  if (tok.empty()) throw std::invalid_argument("missing pattern argument");
  if (tok.size() == 1 && std::filesystem::exists(tok[0])) {
    std::ifstream in(tok[0]);
    if (!in) throw std::invalid_argument("cannot open " + tok[0]);
    json j;
    in >> j;
    return pattern_from_json(j);
  }
  if (tok[0] == "kkl") {
    if (tok.size() != 3) throw std::invalid_argument("usage: kkl L K");
    return kkl_pattern(parse_int(tok[1], "l"), parse_int(tok[2], "k"));
  }
  if (tok.size() == 1 && tok[0] == "bipartite-like") return bipartite_like_pattern();
  throw std::invalid_argument("unknown pattern '" + spec +
                              "' (try: kkl L K, bipartite-like, or a JSON file)");
}

std::vector<Hypergraph> resolve_family(const std::vector<std::string>& specs) {
  std::vector<Hypergraph> family;
  family.reserve(specs.size());
  for (const std::string& s : specs) family.push_back(resolve_graph(s));
  return family;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

void emit_json(const json& j, const std::string& out_path) {
  write_output(round_floats(j).dump(2) + "\n", out_path);
}

json vector_to_json(const Eigen::ArrayXd& x) {
  json a = json::array();
  for (int i = 0; i < x.size(); ++i) a.push_back(x[i]);
  return a;
}

json solve_to_json(const Hypergraph& h, const SpectralResult& res) {
  return json{{"n", h.n()},
              {"k", h.k()},
              {"edge_count", h.edge_count()},
              {"alpha", res.alpha},
              {"lambda", res.lambda},
              {"residual", res.residual},
              {"iterations", res.iterations},
              {"starts_used", res.starts_used},
              {"converged", res.converged},
              {"average_bound", average_bound(h, res.alpha)},
              {"vector", vector_to_json(res.vector)},
              {"solver", kSolverVersion}};
}

const char* stop_name(PeelStop s) {
  switch (s) {
    case PeelStop::degree_threshold_met: return "degree-threshold-met";
    case PeelStop::floor_size_reached: return "floor-size-reached";
    case PeelStop::solver_failure: return "solver-failure";
  }
  return "?";
}

void add_solver_flags(CLI::App* cmd, SolverOptions& o) {
  cmd->add_option("--tol", o.tol, "residual tolerance for convergence");
  cmd->add_option("--max-iter", o.max_iter, "iteration cap per start");
  cmd->add_option("--starts", o.starts, "starting vectors (all-ones + random)");
  cmd->add_option("--seed", o.seed, "seed for the random starts");
  cmd->add_option("--shift", o.shift, "fixed damping shift (0 = adaptive)");
  cmd->add_option("--threads", o.threads, "solver threads (<= 0: all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyturan: spectral and extremal queries on uniform hypergraphs"};
  app.require_subcommand(1);
  int rc = 0;

  // Reused option storage (one subcommand runs per invocation).
  std::vector<std::string> spec;
  std::vector<std::string> forbid;
  std::vector<std::string> suites;
  std::string pattern_spec, format = "json", verify_format = "text", out_path;
  double alpha = 2.0, epsilon = 0.1, pi = 1.0;
  int n = 0, k = 0, n_from = 0, n_to = 0, expand_k = 0, floor_size = 0;
  bool do_extend = false;
  SolverOptions solver;
  SearchOptions search;

  {
    auto* c = app.add_subcommand("construct",
                                 "Build a named hypergraph or transform an input graph");
    c->add_option("spec", spec, "construction name + arguments, or a file ('-' = stdin)")
        ->required();
    c->add_option("--expand", expand_k, "replace the graph by its K-expansion (2-graph input)");
    c->add_flag("--extend", do_extend,
                "cover every uncovered vertex pair with a fresh edge");
    c->add_option("--format", format, "json|text (default json)");
    c->add_option("-o,--output", out_path, "output file (default stdout)");
    c->callback([&] {
      Hypergraph h = resolve_graph(spec);
      if (expand_k) h = expansion(h, expand_k);
      if (do_extend) h = extension(h);
      if (format == "text")
        write_output(to_text(h), out_path);
      else if (format == "json")
        emit_json(to_json(h), out_path);
      else
        throw std::invalid_argument("construct supports --format json|text");
    });
  }

  {
    auto* c = app.add_subcommand("lambda", "Compute the alpha-spectral radius");
    c->add_option("graph", spec, "graph file or construction")->required();
    c->add_option("--alpha", alpha, "exponent alpha > 1")->required();
    add_solver_flags(c, solver);
    c->add_option("-o,--output", out_path, "output file (default stdout)");
    c->callback([&] {
      Hypergraph h = resolve_graph(spec);
      SpectralResult res = spectral_radius(h, alpha, solver);
      emit_json(solve_to_json(h, res), out_path);
      if (!res.converged) rc = kExitNoConverge;
    });
  }

  {
    auto* c = app.add_subcommand("free", "Test whether a graph avoids forbidden subgraphs");
    c->add_option("graph", spec, "graph file or construction")->required();
    c->add_option("--forbid", forbid,
                  "forbidden graph (file or quoted construction); repeatable")
        ->required();
    c->add_option("-o,--output", out_path, "output file (default stdout)");
    c->callback([&] {
      Hypergraph h = resolve_graph(spec);
      std::vector<Hypergraph> family = resolve_family(forbid);
      json j{{"free", true}, {"embedding", nullptr}};
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (auto phi = contains_sub(h, family[i])) {
          j["free"] = false;
          j["embedding"] = {{"family_index", i}, {"map", phi->map}};
          break;
        }
      }
      emit_json(j, out_path);
    });
  }

  {
    auto* c = app.add_subcommand("cancellative",
                                 "Test the cancellative property (A∪B = A∪C forces B = C)");
    c->add_option("graph", spec, "graph file or construction")->required();
    c->add_option("-o,--output", out_path, "output file (default stdout)");
    c->callback([&] {
      Hypergraph h = resolve_graph(spec);
      emit_json(json{{"n", h.n()},
                     {"k", h.k()},
                     {"edge_count", h.edge_count()},
                     {"cancellative", is_cancellative(h)}},
                out_path);
    });
  }

  {
    auto* c = app.add_subcommand("color", "Search for a pattern coloring");
    c->add_option("graph", spec, "graph file or construction")->required();
    c->add_option("--pattern", pattern_spec,
                  "pattern: JSON file, 'kkl L K', or 'bipartite-like'")
        ->required();
    c->add_option("-o,--output", out_path, "output file (default stdout)");
    c->callback([&] {
      Hypergraph h = resolve_graph(spec);
      Pattern p = resolve_pattern(pattern_spec);
      auto coloring = find_pattern_coloring(h, p);
      json j{{"colorable", coloring.has_value()},
             {"coloring", coloring ? json(*coloring) : json(nullptr)},
             {"pattern", to_json(p)}};
      emit_json(j, out_path);
    });
  }

  {
    auto* c = app.add_subcommand("ex",
                                 "Exhaustive maximum edge count over F-free graphs");
    c->add_option("--n", n, "number of vertices")->required();
    c->add_option("--k", k, "edge size")->required();
    c->add_option("--forbid", forbid,
                  "forbidden graph (file or quoted construction); repeatable")
        ->required();
    c->add_flag("--override-cap", search.override_cap,
                "search even when C(n,k) exceeds 64 candidate edges");
    c->add_option("-o,--output", out_path, "output file (default stdout)");
    c->callback([&] {
      SearchResult res = ex_search(n, k, resolve_family(forbid), search);
      json wits = json::array();
      for (const Hypergraph& w : res.witnesses) wits.push_back(to_json(w));
      emit_json(json{{"n", n},
                     {"k", k},
                     {"optimum_edges", res.optimum_edges},
                     {"complete", res.complete},
                     {"nodes_explored", res.nodes_explored},
                     {"witness_count", res.witnesses.size()},
                     {"witnesses", wits}},
                out_path);
    });
  }

  {
    auto* c = app.add_subcommand(
        "spex", "Exhaustive maximum alpha-spectral radius over F-free graphs");
    c->add_option("--n", n, "number of vertices")->required();
    c->add_option("--k", k, "edge size")->required();
    c->add_option("--alpha", alpha, "exponent alpha > 1")->required();
    c->add_option("--forbid", forbid,
                  "forbidden graph (file or quoted construction); repeatable")
        ->required();
    c->add_flag("--override-cap", search.override_cap,
                "search even when C(n,k) exceeds 64 candidate edges");
    c->add_flag("--unsafe-prune", search.unsafe_prune,
                "heuristic upper-bound cut; clears the 'complete' flag");
    add_solver_flags(c, search.solver);
    c->add_option("-o,--output", out_path, "output file (default stdout)");
    c->callback([&] {
      SearchResult res = spex_search(n, k, resolve_family(forbid), alpha, search);
      json wits = json::array();
      for (const Hypergraph& w : res.witnesses) wits.push_back(to_json(w));
      emit_json(json{{"n", n},
                     {"k", k},
                     {"alpha", alpha},
                     {"optimum_lambda", res.optimum_lambda},
                     {"complete", res.complete},
                     {"solver_all_converged", res.solver_all_converged},
                     {"nodes_explored", res.nodes_explored},
                     {"witness_count", res.witnesses.size()},
                     {"witnesses", wits}},
                out_path);
      if (!res.solver_all_converged) rc = kExitNoConverge;
    });
  }

  {
    auto* c = app.add_subcommand("trend",
                                 "Extremal edge counts and densities over a range of n");
    c->add_option("--k", k, "edge size")->required();
    c->add_option("--forbid", forbid,
                  "forbidden graph (file or quoted construction); repeatable")
        ->required();
    c->add_option("--n-from", n_from, "first n")->required();
    c->add_option("--n-to", n_to, "last n")->required();
    c->add_flag("--override-cap", search.override_cap,
                "search even when C(n,k) exceeds 64 candidate edges");
    c->add_option("--format", format, "json|csv (default json)");
    c->add_option("-o,--output", out_path, "output file (default stdout)");
    c->callback([&] {
      auto rows = density_trend(k, resolve_family(forbid), n_from, n_to, search);
      if (format == "csv") {
        std::string csv = "n,ex,density\n";
        char buf[96];
        for (const TrendRow& r : rows) {
          std::snprintf(buf, sizeof buf, "%d,%lld,%.12g\n", r.n, r.ex, r.density);
          csv += buf;
        }
        write_output(csv, out_path);
      } else if (format == "json") {
        json rows_json = json::array();
        for (const TrendRow& r : rows)
          rows_json.push_back({{"n", r.n}, {"ex", r.ex}, {"density", r.density}});
        emit_json(rows_json, out_path);
      } else {
        throw std::invalid_argument("trend supports --format json|csv");
      }
    });
  }

  {
    auto* c = app.add_subcommand(
        "peel", "Iteratively remove minimum-eigenvector-entry vertices");
    c->add_option("graph", spec, "graph file or construction")->required();
    c->add_option("--alpha", alpha, "exponent alpha > 1")->required();
    c->add_option("--epsilon", epsilon, "slack in (0,1)")->required();
    c->add_option("--pi", pi, "asymptotic edge density of the extremal family")
        ->required();
    c->add_option("--floor", floor_size, "stop at this many vertices (default k)");
    add_solver_flags(c, solver);
    c->add_option("--format", format, "json|csv (default json)");
    c->add_option("-o,--output", out_path, "output file (default stdout)");
    c->callback([&] {
      Hypergraph h = resolve_graph(spec);
      PeelParams p;
      p.alpha = alpha;
      p.epsilon = epsilon;
      p.pi = pi;
      p.k = h.k();
      PeelTrace t = peel(h, p, floor_size > 0 ? floor_size : h.k(), solver);
      if (format == "csv") {
        std::string csv =
            "n_before,removed_vertex,lambda_before,lambda_after,x_min_alpha,"
            "min_degree_before,threshold,ratio_bound_ok,sub_poly_value,identity_gap\n";
        char buf[256];
        for (const PeelStep& s : t.steps) {
          std::snprintf(buf, sizeof buf, "%d,%d,%.12g,%.12g,%.12g,%d,%.12g,%d,%.12g,%.12g\n",
                        s.n_before, s.removed_vertex, s.lambda_before, s.lambda_after,
                        s.x_min_alpha, s.min_degree_before, s.threshold,
                        int(s.ratio_bound_ok), s.sub_poly_value, s.identity_gap);
          csv += buf;
        }
        write_output(csv, out_path);
      } else if (format == "json") {
        json steps = json::array();
        for (const PeelStep& s : t.steps)
          steps.push_back({{"n_before", s.n_before},
                           {"removed_vertex", s.removed_vertex},
                           {"lambda_before", s.lambda_before},
                           {"lambda_after", s.lambda_after},
                           {"x_min_alpha", s.x_min_alpha},
                           {"min_degree_before", s.min_degree_before},
                           {"threshold", s.threshold},
                           {"ratio_bound_ok", s.ratio_bound_ok},
                           {"sub_poly_value", s.sub_poly_value},
                           {"identity_gap", s.identity_gap}});
        emit_json(json{{"params",
                        {{"alpha", p.alpha},
                         {"epsilon", p.epsilon},
                         {"pi", p.pi},
                         {"k", p.k},
                         {"eps_prime", p.eps_prime()},
                         {"eps_dprime", p.eps_dprime()}}},
                       {"steps", steps},
                       {"terminated", stop_name(t.terminated)},
                       {"final",
                        {{"n", t.final_graph.n()},
                         {"old_labels", t.final_old_labels},
                         {"graph", to_json(t.final_graph)}}}},
                  out_path);
      } else {
        throw std::invalid_argument("peel supports --format json|csv");
      }
      if (t.terminated == PeelStop::solver_failure) rc = kExitNoConverge;
    });
  }

  {
    auto* c = app.add_subcommand("verify", "Run named consistency suites");
    c->add_option("suite", suites,
                  "suites to run (default: all); see --list for names");
    bool list_only = false;
    c->add_flag("--list", list_only, "print suite names and exit");
    add_solver_flags(c, solver);
    c->add_option("--format", verify_format, "text|json (default text)");
    c->add_option("-o,--output", out_path, "output file (default stdout)");
    c->callback([&] {
      if (list_only) {
        std::string names;
        for (const auto& s : verify_suite_names()) names += s + "\n";
        write_output(names, out_path);
        return;
      }
      std::vector<std::string> to_run = suites.empty() ? verify_suite_names() : suites;
      int passed = 0, failed = 0;
      std::string text;
      json rows = json::array();
      for (const std::string& suite : to_run) {
        for (const Check& c2 : run_verify_suite(suite, solver)) {
          (c2.pass ? passed : failed)++;
          if (verify_format == "json") {
            rows.push_back({{"suite", suite},
                            {"name", c2.name},
                            {"pass", c2.pass},
                            {"details", c2.details}});
          } else {
            text += std::string("[") + (c2.pass ? "PASS" : "FAIL") + "] " + suite +
                    ": " + c2.name;
            if (!c2.details.empty()) text += " -- " + c2.details;
            text += "\n";
          }
        }
      }
      if (verify_format == "json") {
        emit_json(json{{"checks", rows}, {"passed", passed}, {"failed", failed}},
                  out_path);
      } else if (verify_format == "text") {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%d passed, %d failed\n", passed, failed);
        write_output(text + buf, out_path);
      } else {
        throw std::invalid_argument("verify supports --format text|json");
      }
      if (failed > 0) rc = kExitCheckFailed;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  } catch (const SearchCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return rc;
}

#include "hyturan/verify.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <stdexcept>

#include "hyturan/constructions.hpp"
#include "hyturan/containment.hpp"
#include "hyturan/pattern.hpp"
#include "hyturan/search.hpp"
#include "hyturan/stability.hpp"

namespace hyturan {

namespace {

std::string strf(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

Hypergraph with_edge(const Hypergraph& h, Edge e) {
  auto edges = h.edges();
  edges.push_back(std::move(e));
  return Hypergraph(h.n(), h.k(), std::move(edges));
}

Hypergraph without_edge(const Hypergraph& h, int idx) {
  auto edges = h.edges();
  edges.erase(edges.begin() + idx);
  return Hypergraph(h.n(), h.k(), std::move(edges));
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"closed-forms", "monotonicity", "turan-pairs",
          "bollobas",     "peeling",      "growth"};
}

std::vector<Check> verify_closed_forms(const SolverOptions& opts) {
  std::vector<Check> out;
  struct Row {
    int n, l, k;
    double alpha;
  };
  const Row rows[] = {{4, 2, 2, 2.0},  {6, 3, 2, 1.5},   {6, 3, 3, 3.0},
                      {8, 4, 3, 2.0},  {8, 2, 2, 3.0},   {10, 5, 4, 2.0},
                      {12, 4, 4, 2.5}, {9, 3, 3, 2.0},   {12, 3, 3, 1.5}};
  for (const Row& r : rows) {
    SpectralResult res = spectral_radius(turan_graph(r.n, r.l, r.k), r.alpha, opts);
    double want = closed_form_multipartite(r.n, r.l, r.k, r.alpha);
    double rel = std::abs(res.lambda - want) / want;
    out.push_back({strf("multipartite n=%d l=%d k=%d alpha=%g", r.n, r.l, r.k, r.alpha),
                   res.converged && rel <= 1e-6,
                   strf("lambda=%.12g exact=%.12g rel=%.2e", res.lambda, want, rel)});
  }
  for (int n : {4, 5, 6, 7, 8, 10}) {
    for (double alpha : {1.5, 2.0, 4.0}) {
      SpectralResult res = spectral_radius(bipartite_like_complete(n, 2), alpha, opts);
      double want = closed_form_b4(n, alpha);
      double rel = std::abs(res.lambda - want) / want;
      out.push_back({strf("bipartite-like n=%d alpha=%g", n, alpha),
                     res.converged && rel <= 1e-6,
                     strf("lambda=%.12g exact=%.12g rel=%.2e", res.lambda, want, rel)});
    }
  }
  return out;
}

std::vector<Check> verify_monotonicity(const SolverOptions& opts) {
  std::vector<Check> out;
  const double alpha = 2.0;
  {
    Hypergraph base = turan_graph(6, 3, 3);
    double lam = spectral_radius(base, alpha, opts).lambda;
    double lam_add = spectral_radius(with_edge(base, {0, 1, 2}), alpha, opts).lambda;
    out.push_back({"edge addition raises lambda", lam_add > lam + 1e-9,
                   strf("before=%.12g after=%.12g", lam, lam_add)});
    double lam_del = spectral_radius(without_edge(base, 0), alpha, opts).lambda;
    out.push_back({"edge deletion lowers lambda (3-partite)", lam_del < lam - 1e-7,
                   strf("before=%.12g after=%.12g", lam, lam_del)});
  }
  {
    Hypergraph base = bipartite_like_complete(8, 2);
    double lam = spectral_radius(base, alpha, opts).lambda;
    double lam_del = spectral_radius(without_edge(base, 0), alpha, opts).lambda;
    out.push_back({"edge deletion lowers lambda (bipartite-like)", lam_del < lam - 1e-7,
                   strf("before=%.12g after=%.12g", lam, lam_del)});
  }
  {
    bool increasing = true;
    std::string seq;
    double prev = 0.0;
    for (int n = 6; n <= 10; ++n) {
      double lam = spectral_radius(turan_graph(n, 3, 3), alpha, opts).lambda;
      if (n > 6 && lam <= prev + 1e-9) increasing = false;
      seq += strf(n == 6 ? "%.6g" : " %.6g", lam);
      prev = lam;
    }
    out.push_back({"lambda grows along the 3-partite chain", increasing, seq});
  }
  return out;
}

std::vector<Check> verify_turan_pairs() {
  std::vector<Check> out;
  const std::vector<Hypergraph> fam33 = {generalized_triangle(3), generalized_fan(3), f4()};
  const Pattern kkl33 = kkl_pattern(3, 3);
  for (int n : {6, 7, 8, 9}) {
    Hypergraph h = turan_graph(n, 3, 3);
    bool free_ok = is_family_free(h, fam33);
    bool canc = is_cancellative(h);
    bool color = find_pattern_coloring(h, kkl33).has_value();
    out.push_back({strf("3-partite n=%d avoids {T3, Fan, F4}", n), free_ok, ""});
    out.push_back({strf("3-partite n=%d is cancellative", n), canc, ""});
    out.push_back({strf("3-partite n=%d admits the rainbow coloring", n), color, ""});
  }
  const std::vector<Hypergraph> fam4 = {f7()};
  const Pattern bip = bipartite_like_pattern();
  for (int n : {4, 6, 8, 9}) {
    Hypergraph h = bipartite_like_complete(n, 2);
    out.push_back({strf("bipartite-like n=%d avoids F7", n), is_family_free(h, fam4), ""});
    out.push_back({strf("bipartite-like n=%d admits the two-class coloring", n),
                   find_pattern_coloring(h, bip).has_value(), ""});
  }
  {
    Hypergraph h = turan_graph(8, 4, 4);
    out.push_back({"4-partite n=8 avoids T4",
                   is_family_free(h, {generalized_triangle(4)}), ""});
    out.push_back({"4-partite n=8 admits the rainbow coloring",
                   find_pattern_coloring(h, kkl_pattern(4, 4)).has_value(), ""});
  }
  out.push_back({"F4 admits no rainbow coloring",
                 !find_pattern_coloring(f4(), kkl33).has_value(), ""});
  out.push_back({"T3 admits no rainbow coloring",
                 !find_pattern_coloring(generalized_triangle(3), kkl33).has_value(), ""});
  return out;
}

std::vector<Check> verify_bollobas() {
  std::vector<Check> out;
  const std::vector<Hypergraph> fam = {f4(), generalized_triangle(3)};
  {
    std::vector<Edge> all;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b)
        for (int c = b + 1; c < 5; ++c) all.push_back({a, b, c});
    int agree = 0, total = 1 << all.size();
    for (int mask = 0; mask < total; ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i)
        if (mask >> i & 1) edges.push_back(all[i]);
      Hypergraph h(5, 3, std::move(edges));
      if (is_cancellative(h) == is_family_free(h, fam)) ++agree;
    }
    out.push_back({"cancellative == {F4, T3}-free on all 5-vertex 3-graphs",
                   agree == total, strf("%d/%d agree", agree, total)});
  }
  for (int n : {5, 6}) {
    SearchResult res = ex_search(n, 3, fam);
    long long want = turan_edge_count(n, 3, 3);
    std::string turan_canon = canonical_form(turan_graph(n, 3, 3));
    bool has_turan = false;
    for (const Hypergraph& w : res.witnesses)
      if (canonical_form(w) == turan_canon) has_turan = true;
    out.push_back({strf("extremal count at n=%d", n),
                   res.complete && res.optimum_edges == want,
                   strf("found=%lld expected=%lld witnesses=%zu", res.optimum_edges,
                        want, res.witnesses.size())});
    out.push_back({strf("3-partite graph attains the optimum at n=%d", n), has_turan,
                   strf("%zu extremal classes", res.witnesses.size())});
  }
  return out;
}

std::vector<Check> verify_peeling(const SolverOptions& opts) {
  std::vector<Check> out;
  PeelParams p;
  p.alpha = 3.0;
  p.epsilon = 0.3;
  p.pi = 2.0 / 9.0;
  p.k = 3;
  {
    Hypergraph h = turan_graph(9, 3, 3);
    PeelTrace t = peel(h, p, 3, opts);
    out.push_back({"degree threshold stops peeling immediately",
                   t.terminated == PeelStop::degree_threshold_met && t.steps.empty() &&
                       t.final_graph.n() == 9,
                   strf("min degree=%d threshold=%.6g", h.min_degree(),
                        degree_threshold(9, p))});
  }
  {
    Hypergraph planted(10, 3, turan_graph(9, 3, 3).edges());
    PeelTrace t = peel(planted, p, 3, opts);
    bool ok = t.steps.size() == 1 && t.steps[0].removed_vertex == 9 &&
              t.terminated == PeelStop::degree_threshold_met &&
              t.final_graph.n() == 9;
    out.push_back({"isolated vertex peeled first", ok,
                   ok ? strf("identity gap=%.3g", t.steps[0].identity_gap)
                      : strf("steps=%zu", t.steps.size())});
    if (!t.steps.empty())
      out.push_back({"one-vertex deletion identity",
                     std::abs(t.steps[0].identity_gap) <= 1e-8,
                     strf("gap=%.3g", t.steps[0].identity_gap)});

    SpectralResult res = spectral_radius(planted, p.alpha, opts);
    MinEntryReport rep = check_min_entry_bound(planted, p, res, 17.0);
    out.push_back({"small-entry implication on the planted instance",
                   rep.premise_lambda_ok && rep.premise_degree_ok &&
                       rep.conclusion_holds && rep.consistent,
                   strf("x_min^a=%.3g bound=%.6g", rep.x_min_alpha, rep.bound)});
  }
  {
    PeelParams q = p;
    q.epsilon = 0.1;
    RemovalRatioReport rep = check_removal_ratio(turan_graph(10, 3, 3), 9, q, opts);
    out.push_back({"removal ratio bounds on the unbalanced 3-partite graph",
                   rep.applicable && rep.ok_intermediate && rep.ok_main,
                   strf("ratio=%.6g intermediate=%.6g main=%.6g", rep.ratio,
                        rep.intermediate_bound, rep.main_bound)});
  }
  {
    PeelParams q = p;
    q.epsilon = 0.5;
    N0Bound b = n0_bound(10.0, q);
    out.push_back({"explicit size bound stays finite on the sample instance",
                   !b.overflowed && b.log_value > 0.0,
                   strf("log=%.6g value=%.6g", b.log_value, b.value)});
  }
  out.push_back({"reciprocal power fact at x=0.3 beta=2",
                 std::pow(1.0 - 0.3, -2.0) >= reciprocal_power_lower(0.3, 2.0),
                 strf("lhs=%.6g rhs=%.6g", std::pow(0.7, -2.0),
                      reciprocal_power_lower(0.3, 2.0))});
  out.push_back({"exponential product fact at x=0.3",
                 1.0 - 0.3 >= exp_product_lower(0.3),
                 strf("lhs=%.6g rhs=%.6g", 0.7, exp_product_lower(0.3))});
  return out;
}

std::vector<Check> verify_growth(const SolverOptions& opts) {
  std::vector<Check> out;
  PeelParams p;
  p.alpha = 3.0;
  p.epsilon = 0.3;
  p.pi = 2.0 / 9.0;
  p.k = 3;
  std::vector<std::pair<int, double>> chain;
  bool all_converged = true;
  for (int n = 6; n <= 15; ++n) {
    SpectralResult res = spectral_radius(turan_graph(n, 3, 3), p.alpha, opts);
    all_converged = all_converged && res.converged;
    chain.emplace_back(n, res.lambda);
  }
  out.push_back({"solver converged along the chain", all_converged,
                 strf("n=6..15 alpha=%g", p.alpha)});
  GrowthReport rep = check_growth_condition(chain, p);
  for (const GrowthPair& g : rep.pairs)
    out.push_back({strf("growth step to n=%d", g.n), g.ok,
                   strf("lhs=%.6g rhs=%.6g margin=%.6g", g.lhs, g.rhs, g.margin)});
  out.push_back({"growth condition holds along the whole chain", rep.all_ok,
                 rep.first_failure_n ? strf("first failure at n=%d", *rep.first_failure_n)
                                     : std::string("no failures")});
  return out;
}

std::vector<Check> run_verify_suite(const std::string& name,
                                    const SolverOptions& opts) {
  if (name == "closed-forms") return verify_closed_forms(opts);
  if (name == "monotonicity") return verify_monotonicity(opts);
  if (name == "turan-pairs") return verify_turan_pairs();
  if (name == "bollobas") return verify_bollobas();
  if (name == "peeling") return verify_peeling(opts);
  if (name == "growth") return verify_growth(opts);
  throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace hyturan

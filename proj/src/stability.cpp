#include "hyturan/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hyturan {

namespace {

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

void PeelParams::validate() const {
  if (!(alpha > 1.0 + 1e-9)) throw std::invalid_argument("peel params: alpha must exceed 1 + 1e-9");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("peel params: epsilon must lie in (0,1)");
  if (!(pi > 0.0)) throw std::invalid_argument("peel params: pi must be positive");
  if (k < 2) throw std::invalid_argument("peel params: k must be >= 2");
}

double degree_threshold(int n, const PeelParams& p) {
  p.validate();
  return (1.0 - p.epsilon) * p.pi * double(binomial(n, p.k - 1));
}

double spectral_lower_bound(int n, const PeelParams& p) {
  p.validate();
  return p.pi * (1.0 - 2.0 * p.eps_prime()) *
         std::pow(double(n), p.k - double(p.k) / p.alpha);
}

N0Bound n0_bound(double n0_seed, const PeelParams& p) {
  p.validate();
  if (!(n0_seed >= 1.0)) throw std::invalid_argument("n0_bound: seed must be >= 1");
  if (!(p.eps_prime() < 0.5))
    throw std::invalid_argument("n0_bound: requires eps' < 1/2");
  const double exponent_gap = p.k - double(p.k) / p.alpha;
  const double inner_log = exponent_gap * std::log(n0_seed) +
                           double(p.k) * p.k -
                           std::log((1.0 - 2.0 * p.eps_prime()) * p.pi);
  const double log_value = 2.0 / (exponent_gap * p.eps_dprime()) * inner_log;
  double value = std::exp(log_value);
  return {std::isfinite(value) ? value : std::numeric_limits<double>::infinity(),
          log_value, !std::isfinite(value)};
}

PeelTrace peel(const Hypergraph& h, const PeelParams& p, int floor_size,
               const SolverOptions& opts) {
  p.validate();
  if (p.k != h.k()) throw std::invalid_argument("peel: params.k != h.k()");
  if (floor_size < h.k())
    throw std::invalid_argument("peel: floor_size must be >= k");
  if (h.n() < floor_size) throw std::invalid_argument("peel: graph below floor size");

  PeelTrace trace;
  Hypergraph cur = h;
  std::vector<int> labels(h.n());
  std::iota(labels.begin(), labels.end(), 0);

  std::optional<SpectralResult> cached;  // solve of `cur` from the last step
  const double exponent_gap = p.k - double(p.k) / p.alpha;
  while (true) {
    if (double(cur.min_degree()) >= degree_threshold(cur.n(), p)) {
      trace.terminated = PeelStop::degree_threshold_met;
      break;
    }
    if (cur.n() <= floor_size) {
      trace.terminated = PeelStop::floor_size_reached;
      break;
    }
    if (!cached) cached = spectral_radius(cur, p.alpha, opts);
    if (!cached->converged) {
      trace.terminated = PeelStop::solver_failure;
      break;
    }
    SpectralResult res = std::move(*cached);
    cached.reset();

    int v = 0;
    for (int i = 1; i < cur.n(); ++i)
      if (res.vector[i] < res.vector[v]) v = i;  // first minimum = lowest original label

    PeelStep step;
    step.n_before = cur.n();
    step.removed_vertex = labels[v];
    step.lambda_before = res.lambda;
    step.x_min_alpha = std::pow(res.vector[v], p.alpha);
    step.min_degree_before = cur.min_degree();
    step.threshold = degree_threshold(cur.n(), p);

    VertexRemoval removal = remove_vertex(cur, v);
    Eigen::ArrayXd restricted(removal.graph.n());
    for (int i = 0; i < removal.graph.n(); ++i)
      restricted[i] = res.vector[removal.old_label[i]];
    step.sub_poly_value = lagrangian_poly(removal.graph, restricted);
    step.identity_gap =
        step.sub_poly_value - (1.0 - p.k * step.x_min_alpha) * step.lambda_before;

    SpectralResult after = spectral_radius(removal.graph, p.alpha, opts);
    if (!after.converged) {  // roll back: keep only fully evaluated steps
      trace.terminated = PeelStop::solver_failure;
      break;
    }
    step.lambda_after = after.lambda;
    step.ratio_bound_ok =
        step.lambda_after >=
        (1.0 - exponent_gap * (1.0 - p.eps_dprime() / 2.0) / step.n_before) *
            step.lambda_before;

    std::vector<int> new_labels(removal.graph.n());
    for (int i = 0; i < removal.graph.n(); ++i)
      new_labels[i] = labels[removal.old_label[i]];
    labels = std::move(new_labels);
    cur = std::move(removal.graph);
    cached = std::move(after);
    trace.steps.push_back(step);
  }
  trace.final_graph = std::move(cur);
  trace.final_old_labels = std::move(labels);
  return trace;
}

MinEntryReport check_min_entry_bound(const Hypergraph& h, const PeelParams& p,
                                     const SpectralResult& result,
                                     std::optional<double> reference_lambda) {
  p.validate();
  if (h.n() == 0) throw std::invalid_argument("check_min_entry_bound: empty vertex set");
  if (result.vector.size() != h.n())
    throw std::invalid_argument("check_min_entry_bound: result does not match graph");
  MinEntryReport rep;
  rep.reference_lambda = reference_lambda.value_or(spectral_lower_bound(h.n(), p));
  rep.min_degree = h.min_degree();
  rep.threshold = degree_threshold(h.n(), p);
  rep.premise_lambda_ok = result.lambda >= rep.reference_lambda;
  rep.premise_degree_ok = rep.min_degree < rep.threshold;
  rep.x_min_alpha = std::pow(result.vector.minCoeff(), p.alpha);
  rep.bound = (1.0 - p.eps_dprime()) / h.n();
  rep.conclusion_holds = rep.x_min_alpha < rep.bound;
  rep.consistent =
      !(rep.premise_lambda_ok && rep.premise_degree_ok) || rep.conclusion_holds;
  return rep;
}

RemovalRatioReport check_removal_ratio(const Hypergraph& h, int v,
                                       const PeelParams& p,
                                       const SolverOptions& opts) {
  p.validate();
  if (p.k != h.k()) throw std::invalid_argument("check_removal_ratio: params.k != h.k()");
  if (v < 0 || v >= h.n())
    throw std::invalid_argument("check_removal_ratio: vertex out of range");
  RemovalRatioReport rep;
  SpectralResult before = spectral_radius(h, p.alpha, opts);
  rep.lambda_before = before.lambda;
  rep.x_v_alpha = std::pow(before.vector[v], p.alpha);
  rep.hypothesis_bound = (1.0 - p.eps_dprime()) / h.n();

  VertexRemoval removal = remove_vertex(h, v);
  SpectralResult after = spectral_radius(removal.graph, p.alpha, opts);
  rep.lambda_after = after.lambda;
  rep.solver_converged = before.converged && after.converged;
  rep.applicable = rep.solver_converged &&
                   rep.x_v_alpha < rep.hypothesis_bound &&
                   rep.lambda_before > 0.0;

  const double exponent_gap = p.k - double(p.k) / p.alpha;
  rep.main_bound =
      1.0 - exponent_gap * (1.0 - p.eps_dprime() / 2.0) / h.n();
  rep.intermediate_bound = (1.0 - p.k * rep.x_v_alpha) /
                           std::pow(1.0 - rep.x_v_alpha, double(p.k) / p.alpha);
  if (rep.lambda_before > 0.0) {
    rep.ratio = rep.lambda_after / rep.lambda_before;
    rep.margin_intermediate = rep.ratio - rep.intermediate_bound;
    rep.margin_main = rep.ratio - rep.main_bound;
    rep.ok_intermediate = rep.ratio >= rep.intermediate_bound;
    rep.ok_main = rep.ratio >= rep.main_bound;
  }
  return rep;
}

GrowthReport check_growth_condition(
    const std::vector<std::pair<int, double>>& lambdas, const PeelParams& p) {
  p.validate();
  if (lambdas.size() < 2)
    throw std::invalid_argument("check_growth_condition: need at least two points");
  GrowthReport rep;
  const double exponent_gap = p.k - double(p.k) / p.alpha;
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    if (lambdas[i].first != lambdas[i - 1].first + 1)
      throw std::invalid_argument("check_growth_condition: n values must be consecutive");
    GrowthPair pair;
    pair.n = lambdas[i].first;
    pair.lhs = lambdas[i].second - lambdas[i - 1].second;
    pair.rhs = exponent_gap * (1.0 - p.eps_prime()) * p.pi *
               std::pow(double(pair.n), exponent_gap - 1.0);
    pair.margin = pair.lhs - pair.rhs;
    pair.ok = pair.lhs >= pair.rhs;
    if (!pair.ok && !rep.first_failure_n) rep.first_failure_n = pair.n;
    rep.all_ok = rep.all_ok && pair.ok;
    rep.pairs.push_back(pair);
  }
  return rep;
}

KlmReport check_klm_conditions(
    const std::vector<std::pair<int, long long>>& ex_values,
    const std::vector<std::pair<int, double>>& lambda_values, double pi, int k,
    double alpha, double c) {
  if (k < 2) throw std::invalid_argument("check_klm_conditions: k must be >= 2");
  if (!(alpha > 1.0 + 1e-9))
    throw std::invalid_argument("check_klm_conditions: alpha must exceed 1 + 1e-9");
  KlmReport rep;
  auto ex_at = [&](int n) -> std::optional<long long> {
    for (const auto& [m, v] : ex_values)
      if (m == n) return v;
    return std::nullopt;
  };
  for (const auto& [n, exn] : ex_values) {
    auto prev = ex_at(n - 1);
    if (!prev) continue;
    KlmRow row;
    row.n = n;
    row.deviation = std::abs(double(exn) - double(*prev) -
                             pi * double(binomial(n, k - 1)));
    row.scale = std::pow(double(n), k - 1);
    row.ratio = row.deviation / row.scale;
    row.ok = row.deviation < c * row.scale;
    rep.c_min_edges = std::max(rep.c_min_edges, row.ratio);
    rep.all_ok = rep.all_ok && row.ok;
    rep.edge_rows.push_back(row);
  }
  const double kfact = factorial(k);
  for (const auto& [n, lam] : lambda_values) {
    auto exn = ex_at(n);
    if (!exn) continue;
    KlmRow row;
    row.n = n;
    row.deviation = std::abs(
        lam - kfact * double(*exn) * std::pow(double(n), -double(k) / alpha));
    row.scale = std::pow(double(n), k - double(k) / alpha - 1.0);
    row.ratio = row.deviation / row.scale;
    row.ok = row.deviation <= c * row.scale;
    rep.c_min_spectral = std::max(rep.c_min_spectral, row.ratio);
    rep.all_ok = rep.all_ok && row.ok;
    rep.spectral_rows.push_back(row);
  }
  rep.c_min = std::max(rep.c_min_edges, rep.c_min_spectral);
  return rep;
}

double reciprocal_power_lower(double x, double beta) { return 1.0 + beta * x; }

double exp_product_lower(double x) { return std::exp(-x - x * x); }

}  // namespace hyturan

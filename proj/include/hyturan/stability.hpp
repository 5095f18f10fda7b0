#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyturan/hypergraph.hpp"
#include "hyturan/spectral.hpp"

namespace hyturan {

// Parameters of the minimum-degree peeling argument. pi is the asymptotic
// edge density of the extremal family (e.g. 2/9 for the 3-partite case,
// 3/8 for the bipartite-like 4-graph case); epsilon in (0,1) is the slack.
struct PeelParams {
  double alpha = 2.0;
  double epsilon = 0.1;
  double pi = 1.0;
  int k = 2;

  double eps_prime() const { return epsilon * pi * (alpha - 1.0) / (2.0 * k * alpha); }
  double eps_dprime() const { return epsilon * pi / (2.0 * (k - 1)); }
  void validate() const;  // throws std::invalid_argument
};

// (1 - epsilon) * pi * C(n, k-1): vertices below this degree get peeled.
double degree_threshold(int n, const PeelParams& p);

// pi * (1 - 2 eps') * n^(k - k/alpha): guaranteed spectral value of the
// near-extremal graphs the peeling argument compares against.
double spectral_lower_bound(int n, const PeelParams& p);

struct N0Bound {
  double value;      // +inf when the double range overflows
  double log_value;  // natural log, always finite
  bool overflowed;
};

// (N0^(k-k/alpha) * e^(k^2) / ((1 - 2 eps') pi))^(2 / ((k - k/alpha) eps")):
// the explicit vertex-count bound above which the peeling argument closes.
N0Bound n0_bound(double n0_seed, const PeelParams& p);

struct PeelStep {
  int n_before = 0;
  int removed_vertex = 0;  // label in the ORIGINAL input graph
  double lambda_before = 0.0;
  double lambda_after = 0.0;
  double x_min_alpha = 0.0;  // (smallest eigenvector entry)^alpha
  int min_degree_before = 0;
  double threshold = 0.0;
  bool ratio_bound_ok = false;  // lambda_after >= (1 - (k-k/a)(1-eps"/2)/n) lambda_before
  double sub_poly_value = 0.0;  // P of the eigenvector restricted to H - v
  double identity_gap = 0.0;    // sub_poly_value - (1 - k x_min_alpha) lambda_before
};

enum class PeelStop { degree_threshold_met, floor_size_reached, solver_failure };

struct PeelTrace {
  std::vector<PeelStep> steps;
  PeelStop terminated = PeelStop::degree_threshold_met;
  Hypergraph final_graph;
  std::vector<int> final_old_labels;  // original label of each final vertex
};

// Repeatedly removes the vertex with the smallest eigenvector entry (ties to
// the lowest original label) while the minimum degree sits below the
// threshold, stopping at floor_size vertices or on solver failure (the trace
// is truncated, never faked). lambda_after of step i equals lambda_before of
// step i+1 exactly (one solve per graph).
PeelTrace peel(const Hypergraph& h, const PeelParams& p, int floor_size,
               const SolverOptions& opts = {});

struct MinEntryReport {
  bool premise_lambda_ok = false;  // lambda >= reference lambda
  bool premise_degree_ok = false;  // min degree below the threshold
  double reference_lambda = 0.0;
  double min_degree = 0.0;
  double threshold = 0.0;
  double x_min_alpha = 0.0;
  double bound = 0.0;  // (1 - eps") / n
  bool conclusion_holds = false;
  bool consistent = false;  // premises imply conclusion on this instance
};

// Small-entry implication check: a graph whose spectral value is at least the
// reference and whose min degree is below the threshold must have
// x_min^alpha < (1 - eps")/n. reference_lambda defaults to
// spectral_lower_bound(n, p).
MinEntryReport check_min_entry_bound(const Hypergraph& h, const PeelParams& p,
                                     const SpectralResult& result,
                                     std::optional<double> reference_lambda = {});

struct RemovalRatioReport {
  bool applicable = false;  // solver converged and x_v^alpha < (1 - eps")/n
  bool solver_converged = false;
  double x_v_alpha = 0.0;
  double hypothesis_bound = 0.0;  // (1 - eps")/n
  double lambda_before = 0.0;
  double lambda_after = 0.0;
  double ratio = 0.0;               // lambda_after / lambda_before
  double intermediate_bound = 0.0;  // (1 - k x_v^a) / (1 - x_v^a)^(k/a)
  double main_bound = 0.0;          // 1 - (k - k/a)(1 - eps"/2)/n
  double margin_intermediate = 0.0;
  double margin_main = 0.0;
  bool ok_intermediate = false;
  bool ok_main = false;
};

// One-vertex-removal ratio check against both the identity-derived bound and
// the asymptotic linearized bound.
RemovalRatioReport check_removal_ratio(const Hypergraph& h, int v,
                                       const PeelParams& p,
                                       const SolverOptions& opts = {});

struct GrowthPair {
  int n = 0;  // the larger endpoint of the consecutive pair
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool ok = false;
};

struct GrowthReport {
  std::vector<GrowthPair> pairs;
  std::optional<int> first_failure_n;
  bool all_ok = true;
};

// lambda_n - lambda_{n-1} >= (k - k/alpha)(1 - eps') pi n^(k - k/alpha - 1)
// over consecutive n (non-consecutive input throws).
GrowthReport check_growth_condition(
    const std::vector<std::pair<int, double>>& lambdas, const PeelParams& p);

struct KlmRow {
  int n = 0;
  double deviation = 0.0;  // raw |.|
  double scale = 0.0;      // n^(k-1) resp. n^(k - k/alpha - 1)
  double ratio = 0.0;      // deviation / scale
  bool ok = false;
};

struct KlmReport {
  std::vector<KlmRow> edge_rows;      // |ex(n) - ex(n-1) - pi C(n,k-1)| < c n^(k-1)
  std::vector<KlmRow> spectral_rows;  // |lambda_n - k! ex(n) n^(-k/a)| <= c n^(k-k/a-1)
  double c_min_edges = 0.0;
  double c_min_spectral = 0.0;
  double c_min = 0.0;  // smallest c making every row pass
  bool all_ok = true;  // under the supplied c
};

KlmReport check_klm_conditions(
    const std::vector<std::pair<int, long long>>& ex_values,
    const std::vector<std::pair<int, double>>& lambda_values, double pi, int k,
    double alpha, double c);

// Helper inequalities used in the reports (test grids pin them):
// (1-x)^(-beta) >= 1 + beta x for 0 <= x < 1, beta >= 1.
double reciprocal_power_lower(double x, double beta);
// 1 - x >= exp(-x - x^2) for 0 <= x < 1/2.
double exp_product_lower(double x);

}  // namespace hyturan

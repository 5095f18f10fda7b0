#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "hyturan/hypergraph.hpp"

namespace hyturan {

struct SolverOptions {
  double tol = 1e-10;      // residual tolerance for convergence
  long max_iter = 200000;  // iteration cap per start (per component)
  int starts = 8;          // all-ones start + (starts-1) seeded random starts
  std::uint64_t seed = 0xA1FA;
  double shift = 0.0;      // > 0: fixed damping shift; otherwise adaptive
  int threads = 1;         // <= 0: hardware concurrency; starts solved in parallel
};

struct SpectralResult {
  double lambda = 0.0;
  double alpha = 2.0;
  Eigen::ArrayXd vector;  // entrywise >= 0, alpha-norm 1
  double residual = 0.0;  // max_i |lambda x_i^(a-1) - (k-1)! sum_{e holds i} prod_{u in e minus i} x_u|
  long iterations = 0;    // summed over starts and components
  int starts_used = 0;
  bool converged = false;  // the returned (lambda, vector) satisfies residual <= tol
};

// P_G(x) = k! * sum over edges of the product of the edge's entries.
// Compensated summation; an edge's product switches to log space when it
// meets an entry below 1e-150. Entries are expected nonnegative.
double lagrangian_poly(const Hypergraph& h, const Eigen::ArrayXd& x);

// Max violation of the eigenequation lambda x_i^(alpha-1) = (k-1)! *
// sum_{e holds i} prod_{u in e minus i} x_u over all vertices.
double eigen_residual(const Hypergraph& h, double alpha, double lambda,
                      const Eigen::ArrayXd& x);

// k! * n^(-k/alpha) * e(h): the value of P at the uniform unit vector, hence
// a lower bound on the alpha-spectral radius.
double average_bound(const Hypergraph& h, double alpha);

// Maximizes P over the nonnegative alpha-norm unit sphere by a shifted
// fixed-point iteration, multi-start, solved per connected component.
// The reported lambda is the attained value P(vector) -- a certified lower
// bound on the alpha-spectral radius -- and residual certifies stationarity.
// Requires n >= 1 and alpha > 1 + 1e-9. Non-convergence is reported through
// converged = false, never thrown.
SpectralResult spectral_radius(const Hypergraph& h, double alpha,
                               const SolverOptions& opts = {});

// (l)_k / l^k * n^(k - k/alpha): the alpha-spectral radius of
// turan_graph(n, l, k) when l divides n (requires l | n).
double closed_form_multipartite(int n, int l, int k, double alpha);

// 4! * 2^(-4/alpha) * C(t,2) C(n-t,2) t^(-2/alpha) (n-t)^(-2/alpha) with
// t = floor(n/2): the alpha-spectral radius of bipartite_like_complete(n, 2).
// For even n this equals (3/8)(n-2)^2 n^(2-4/alpha). Requires n >= 4.
double closed_form_b4(int n, double alpha);

extern const char* const kSolverVersion;

}  // namespace hyturan

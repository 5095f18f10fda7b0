#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hyturan/hypergraph.hpp"
#include "hyturan/spectral.hpp"

namespace hyturan {

// Thrown when C(n, k) exceeds the brute-force cap (64 candidate edges) and
// the caller did not set override_cap.
class SearchCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  bool override_cap = false;
  bool unsafe_prune = false;  // spex only: heuristic cut, clears `complete`
  int threads = 1;            // forwarded to the spectral solver
  SolverOptions solver{};
};

struct SearchResult {
  bool spectral = false;          // false: edge-count objective, true: lambda
  long long optimum_edges = 0;
  double optimum_lambda = 0.0;
  double alpha = 0.0;             // spectral searches only
  std::vector<Hypergraph> witnesses;  // argmax graphs, one per isomorphism class
  bool complete = false;          // search space fully covered by sound reasoning
  unsigned long long nodes_explored = 0;
  bool solver_all_converged = true;
};

// Maximum edge count of an F-free k-graph on n vertices, by DFS over the
// candidate edges in lexicographic order with include/exclude branching.
// Freeness is checked incrementally, anchored at each newly added edge;
// branches that cannot reach the current best are cut. Witnesses collect all
// extremal graphs up to isomorphism.
SearchResult ex_search(int n, int k, const std::vector<Hypergraph>& family,
                       const SearchOptions& opts = {});

// Maximum alpha-spectral radius over F-free k-graphs on n vertices. Since
// adding an edge never lowers lambda, only inclusion-maximal F-free graphs
// are solved; that restriction is exact for the optimum. Witnesses are the
// maximal argmax graphs (lambda within 1e-9 of the optimum), deduplicated by
// canonical form.
SearchResult spex_search(int n, int k, const std::vector<Hypergraph>& family,
                         double alpha, const SearchOptions& opts = {});

struct TrendRow {
  int n;
  long long ex;
  double density;  // ex / C(n, k); 0 when C(n, k) == 0
};

std::vector<TrendRow> density_trend(int k, const std::vector<Hypergraph>& family,
                                    int n_from, int n_to,
                                    const SearchOptions& opts = {});

// Isomorphism-invariant byte string. For n <= 10 it is exact (equal strings
// iff isomorphic): the colex incidence bitstring maximized over vertex
// relabelings, found by prefix-pruned backtracking. For n > 10 it degrades
// to an invariant hash suitable only for bucketing (prefix "H" vs "C").
std::string canonical_form(const Hypergraph& h);

}  // namespace hyturan

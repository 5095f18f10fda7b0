#pragma once

#include <string>
#include <vector>

#include "hyturan/spectral.hpp"

namespace hyturan {

// One self-contained consistency check with a human-readable outcome.
struct Check {
  std::string name;
  bool pass = false;
  std::string details;
};

// Named suites runnable from the CLI. Each returns every check it ran;
// callers decide how to report failures.
//   closed-forms : solver output vs the exact multipartite / bipartite-like
//                  formulas on a parameter grid
//   monotonicity : strict spectral increase under edge addition and strict
//                  decrease under edge deletion on the named constructions
//   turan-pairs  : the named constructions avoid their associated forbidden
//                  families and admit the matching pattern colorings
//   bollobas     : cancellative == {F4, T3}-free on every 3-graph with 5
//                  vertices, plus the exact extremal numbers at n = 5, 6
//   peeling      : minimum-degree peeling behaviour and the one-vertex
//                  deletion identity on small instances
//   growth       : consecutive-n spectral growth condition along the
//                  balanced 3-partite chain (documented failing instance;
//                  see README)
std::vector<std::string> verify_suite_names();

std::vector<Check> verify_closed_forms(const SolverOptions& opts = {});
std::vector<Check> verify_monotonicity(const SolverOptions& opts = {});
std::vector<Check> verify_turan_pairs();
std::vector<Check> verify_bollobas();
std::vector<Check> verify_peeling(const SolverOptions& opts = {});
std::vector<Check> verify_growth(const SolverOptions& opts = {});

// Dispatch by suite name; unknown names throw std::invalid_argument.
std::vector<Check> run_verify_suite(const std::string& name,
                                    const SolverOptions& opts = {});

}  // namespace hyturan

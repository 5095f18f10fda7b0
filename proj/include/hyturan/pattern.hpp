#pragma once

#include <optional>
#include <vector>

#include "hyturan/hypergraph.hpp"

namespace hyturan {

// Color pattern: l colors and a set of admissible k-multisets of colors.
// An edge of a host graph is admissible when the multiset of its vertex
// colors is one of the pattern edges.
struct Pattern {
  int l = 1;
  std::vector<std::vector<int>> edges;  // each sorted ascending; list sorted, deduped

  Pattern(int l, std::vector<std::vector<int>> edges);
  int k() const;  // common multiset size; throws if the pattern has no edges
};

// All k-subsets of {0..l-1}: coloring by this pattern == being l-partite with
// rainbow edges (at most one vertex per class).
Pattern kkl_pattern(int l, int k);

// ({0,1}, {{0,0,1,1}}): 4-graphs whose edges take exactly two vertices from
// each of two classes.
Pattern bipartite_like_pattern();

// Exhaustive backtracking over vertex colorings (vertices in decreasing
// degree order, pruning on partial edge multisets). Returns a coloring, or
// nullopt as a proof that none exists. Requires h.k() == p.k() when both are
// defined.
std::optional<std::vector<int>> find_pattern_coloring(const Hypergraph& h,
                                                      const Pattern& p);

}  // namespace hyturan

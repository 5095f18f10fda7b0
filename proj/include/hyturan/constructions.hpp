#pragma once

#include "hyturan/hypergraph.hpp"

namespace hyturan {

// Balanced complete l-partite k-graph on n vertices. Part i (1-based) has
// floor((n+i-1)/l) vertices, so sizes are ascending and differ by at most
// one; parts occupy consecutive label blocks in increasing order. Edges are
// all k-subsets with at most one vertex per part. Requires 2 <= k <= l.
Hypergraph turan_graph(int n, int l, int k);

// Edge count of turan_graph(n, l, k), computed combinatorially.
long long turan_edge_count(int n, int l, int k);

// Leading term (l)_k / (k! * l^k) * n^k of the edge count, where (l)_k is the
// falling factorial l(l-1)...(l-k+1).
double turan_leading_term(int n, int l, int k);

double falling_factorial(int l, int k);

// Complete "balanced bipartite-like" 2k-graph: the first floor(n/2) labels
// form one part, the rest the other; edges are all unions of a k-subset of
// each part. half_k = k >= 1, n >= 2. b4(n) == bipartite_like_complete(n, 2).
Hypergraph bipartite_like_complete(int n, int half_k);

// k-expansion of a 2-graph: each 2-edge gets k-2 fresh vertices, disjoint
// across edges, appended after the original labels in edge order. k >= 2
// (k == 2 returns g itself).
Hypergraph expansion(const Hypergraph& g, int k);

// Extension of a k-graph f: for every vertex pair not covered by an edge of
// f (in lexicographic order), add one new edge consisting of the pair plus
// k-2 fresh vertices, fresh labels appended sequentially.
Hypergraph extension(const Hypergraph& f);

// Extension of a single k-edge plus one extra vertex (k+1 vertices total).
Hypergraph generalized_fan(int k);

// Generalized triangle on 2k-1 vertices:
// {0..k-1}, {0..k-2, k}, {k-1, k, ..., 2k-2}.
Hypergraph generalized_triangle(int k);

// The 3-graph {0,1,2}, {0,1,3}, {0,2,3} on 4 vertices (complete 3-graph on
// four vertices minus one edge).
Hypergraph f4();

// The 4-graph {0,1,2,3}, {0,1,2,4}, {0,1,2,5}, {3,4,5,6} on 7 vertices.
Hypergraph f7();

// t disjoint k-edges on t*k vertices.
Hypergraph matching(int k, int t);

// k-expansion of the 2-graph star with t edges (center 0, leaves 1..t).
Hypergraph hyperstar(int k, int t);

}  // namespace hyturan

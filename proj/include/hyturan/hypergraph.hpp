#pragma once

#include <string>
#include <vector>

namespace hyturan {

// An edge is a strictly increasing list of k vertex labels.
using Edge = std::vector<int>;

// k-uniform hypergraph on vertex set {0, ..., n-1}.
// Invariants enforced on construction: k >= 2, every edge is a k-subset of
// the vertex set, edges are stored sorted (ascending within an edge,
// lexicographic across edges) with no duplicates.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Edges may arrive unsorted; they are canonicalized. Out-of-range labels,
  // repeated labels inside an edge, wrong edge size, or duplicate edges throw
  // std::invalid_argument.
  Hypergraph(int n, int k, std::vector<Edge> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // e must be sorted ascending.
  bool has_edge(const Edge& e) const;
  int degree(int v) const;
  std::vector<int> degrees() const;
  int min_degree() const;  // throws if n == 0
  int max_degree() const;  // 0 if n == 0

  // Indices into edges() of the edges containing v.
  const std::vector<int>& incident(int v) const;

  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && k_ == other.k_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  int k_ = 2;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// Result of deleting or selecting vertices: the new graph plus the label each
// new vertex carried in the input graph (old_label[new] = old).
struct VertexRemoval {
  Hypergraph graph;
  std::vector<int> old_label;
};

// Deletes v, drops every edge through it, relabels the rest contiguously.
VertexRemoval remove_vertex(const Hypergraph& h, int v);

// Induced subhypergraph on the given vertices (duplicates rejected); vertices
// are relabeled by their rank within the subset.
VertexRemoval induced(const Hypergraph& h, const std::vector<int>& vertices);

// Connected components as sorted vertex lists, ordered by smallest member.
// Isolated vertices form singleton components.
std::vector<std::vector<int>> connected_components(const Hypergraph& h);

long long binomial(int n, int k);

}  // namespace hyturan

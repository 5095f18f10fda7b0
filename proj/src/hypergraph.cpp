#include "hyturan/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyturan {

Hypergraph::Hypergraph(int n, int k, std::vector<Edge> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("hypergraph: n must be >= 0");
  if (k < 2) throw std::invalid_argument("hypergraph: k must be >= 2");
  for (Edge& e : edges_) {
    if (static_cast<int>(e.size()) != k_)
      throw std::invalid_argument("hypergraph: edge of wrong size");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("hypergraph: repeated vertex in edge");
    if (e.front() < 0 || e.back() >= n_)
      throw std::invalid_argument("hypergraph: vertex label out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("hypergraph: duplicate edge");
  incident_.assign(n_, {});
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
    for (int v : edges_[i]) incident_[v].push_back(i);
}

bool Hypergraph::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Hypergraph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("degree: vertex out of range");
  return static_cast<int>(incident_[v].size());
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = static_cast<int>(incident_[v].size());
  return d;
}

int Hypergraph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("min_degree: empty vertex set");
  int m = degree(0);
  for (int v = 1; v < n_; ++v) m = std::min(m, degree(v));
  return m;
}

int Hypergraph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

const std::vector<int>& Hypergraph::incident(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("incident: vertex out of range");
  return incident_[v];
}

VertexRemoval remove_vertex(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.n()) throw std::invalid_argument("remove_vertex: vertex out of range");
  std::vector<int> keep;
  keep.reserve(h.n() - 1);
  for (int u = 0; u < h.n(); ++u)
    if (u != v) keep.push_back(u);
  return induced(h, keep);
}

VertexRemoval induced(const Hypergraph& h, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("induced: repeated vertex");
  if (!vs.empty() && (vs.front() < 0 || vs.back() >= h.n()))
    throw std::invalid_argument("induced: vertex out of range");
  std::vector<int> new_label(h.n(), -1);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) new_label[vs[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (int u : e) {
      if (new_label[u] < 0) break;
      mapped.push_back(new_label[u]);
    }
    if (static_cast<int>(mapped.size()) == h.k()) edges.push_back(std::move(mapped));
  }
  return {Hypergraph(static_cast<int>(vs.size()), h.k(), std::move(edges)), std::move(vs)};
}

std::vector<std::vector<int>> connected_components(const Hypergraph& h) {
  std::vector<int> parent(h.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : h.edges())
    for (std::size_t i = 1; i < e.size(); ++i) {
      int a = find(e[0]), b = find(e[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> by_root(h.n());
  for (int v = 0; v < h.n(); ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<int>> comps;
  for (auto& c : by_root)
    if (!c.empty()) comps.push_back(std::move(c));
  return comps;
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace hyturan

#include "hyturan/containment.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace hyturan {

namespace {

struct Embedder {
  const Hypergraph& h;
  const Hypergraph& f;
  std::vector<int> map;        // f vertex -> h vertex or -1
  std::vector<char> used;      // h vertex already an image
  std::vector<int> order;      // unassigned f vertices, decreasing degree

  Embedder(const Hypergraph& host, const Hypergraph& sub)
      : h(host), f(sub), map(sub.n(), -1), used(host.n(), 0) {}

  // Is edge ef of f still embeddable given the current partial map? Fully
  // mapped edges need an exact host edge; partial ones need a host edge
  // containing every image so far.
  bool edge_feasible(const Edge& ef) const {
    Edge img;
    img.reserve(ef.size());
    for (int u : ef)
      if (map[u] >= 0) img.push_back(map[u]);
    std::sort(img.begin(), img.end());
    if (img.size() == ef.size()) return h.has_edge(img);
    if (img.empty()) return true;
    for (int ei : h.incident(img.front())) {
      const Edge& he = h.edges()[ei];
      if (std::includes(he.begin(), he.end(), img.begin(), img.end())) return true;
    }
    return false;
  }

  bool edges_at_ok(int u) const {
    for (int ei : f.incident(u))
      if (!edge_feasible(f.edges()[ei])) return false;
    return true;
  }

  void build_order() {
    for (int u = 0; u < f.n(); ++u)
      if (map[u] < 0) order.push_back(u);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (f.degree(a) != f.degree(b)) return f.degree(a) > f.degree(b);
      return a < b;
    });
  }

  bool dfs(std::size_t idx) {
    if (idx == order.size()) return true;
    int u = order[idx];
    for (int v = 0; v < h.n(); ++v) {
      if (used[v] || h.degree(v) < f.degree(u)) continue;
      map[u] = v;
      used[v] = 1;
      if (edges_at_ok(u) && dfs(idx + 1)) return true;
      map[u] = -1;
      used[v] = 0;
    }
    return false;
  }
};

void check_uniformity(const Hypergraph& h, const Hypergraph& f) {
  if (f.edge_count() > 0 && f.k() != h.k())
    throw std::invalid_argument("containment: uniformity mismatch");
}

}  // namespace

std::optional<Embedding> contains_sub(const Hypergraph& h, const Hypergraph& f) {
  check_uniformity(h, f);
  if (f.n() > h.n()) return std::nullopt;
  Embedder emb(h, f);
  emb.build_order();
  if (emb.dfs(0)) return Embedding{std::move(emb.map)};
  return std::nullopt;
}

std::optional<Embedding> contains_sub_using_edge(const Hypergraph& h,
                                                 const Hypergraph& f,
                                                 const Edge& host_edge) {
  check_uniformity(h, f);
  if (f.n() > h.n()) return std::nullopt;
  if (!h.has_edge(host_edge))
    throw std::invalid_argument("contains_sub_using_edge: host_edge not in host");
  // Try every edge of f as the preimage, under every bijection onto host_edge.
  for (const Edge& ef : f.edges()) {
    Edge perm = host_edge;  // sorted; run through its permutations
    std::sort(perm.begin(), perm.end());
    do {
      Embedder emb(h, f);
      bool clash = false;
      for (std::size_t i = 0; i < ef.size(); ++i) {
        if (emb.used[perm[i]]) {
          clash = true;
          break;
        }
        emb.map[ef[i]] = perm[i];
        emb.used[perm[i]] = 1;
      }
      if (clash) continue;
      bool ok = true;
      for (std::size_t i = 0; i < ef.size() && ok; ++i)
        ok = emb.edges_at_ok(ef[i]);
      if (!ok) continue;
      // Degree filter for the pinned vertices.
      for (std::size_t i = 0; i < ef.size() && ok; ++i)
        ok = h.degree(perm[i]) >= f.degree(ef[i]);
      if (!ok) continue;
      emb.build_order();
      if (emb.dfs(0)) return Embedding{std::move(emb.map)};
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

bool verify_embedding(const Hypergraph& h, const Hypergraph& f,
                      const Embedding& phi) {
  if (static_cast<int>(phi.map.size()) != f.n()) return false;
  std::vector<char> used(h.n(), 0);
  for (int v : phi.map) {
    if (v < 0 || v >= h.n() || used[v]) return false;
    used[v] = 1;
  }
  for (const Edge& ef : f.edges()) {
    Edge img;
    img.reserve(ef.size());
    for (int u : ef) img.push_back(phi.map[u]);
    std::sort(img.begin(), img.end());
    if (!h.has_edge(img)) return false;
  }
  return true;
}

bool is_family_free(const Hypergraph& h, const std::vector<Hypergraph>& family) {
  for (const Hypergraph& f : family)
    if (contains_sub(h, f)) return false;
  return true;
}

bool is_cancellative(const Hypergraph& h) {
  const auto& edges = h.edges();
  const int m = h.edge_count();
  for (int b = 0; b < m; ++b)
    for (int c = b + 1; c < m; ++c) {
      Edge diff;
      std::set_symmetric_difference(edges[b].begin(), edges[b].end(),
                                    edges[c].begin(), edges[c].end(),
                                    std::back_inserter(diff));
      if (static_cast<int>(diff.size()) > h.k()) continue;
      for (int ei : h.incident(diff.front())) {
        const Edge& a = edges[ei];
        if (std::includes(a.begin(), a.end(), diff.begin(), diff.end()))
          return false;
      }
    }
  return true;
}

}  // namespace hyturan

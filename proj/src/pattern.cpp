#include "hyturan/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyturan {

Pattern::Pattern(int l_, std::vector<std::vector<int>> edges_)
    : l(l_), edges(std::move(edges_)) {
  if (l < 1) throw std::invalid_argument("pattern: l must be >= 1");
  std::size_t size = edges.empty() ? 0 : edges.front().size();
  for (auto& e : edges) {
    if (e.size() != size || size < 2)
      throw std::invalid_argument("pattern: edges must share a size >= 2");
    std::sort(e.begin(), e.end());
    if (e.front() < 0 || e.back() >= l)
      throw std::invalid_argument("pattern: color out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

int Pattern::k() const {
  if (edges.empty()) throw std::invalid_argument("pattern: no edges, k undefined");
  return static_cast<int>(edges.front().size());
}

Pattern kkl_pattern(int l, int k) {
  if (k < 2 || k > l) throw std::invalid_argument("kkl_pattern: need 2 <= k <= l");
  std::vector<std::vector<int>> edges;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      edges.push_back(cur);
      return;
    }
    int need = k - static_cast<int>(cur.size());
    for (int c = from; c + need <= l; ++c) {
      cur.push_back(c);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return Pattern(l, std::move(edges));
}

Pattern bipartite_like_pattern() { return Pattern(2, {{0, 0, 1, 1}}); }

namespace {

// both sorted; is `sub` a sub-multiset of `super`?
bool submultiset(const std::vector<int>& sub, const std::vector<int>& super) {
  std::size_t j = 0;
  for (int x : sub) {
    while (j < super.size() && super[j] < x) ++j;
    if (j == super.size() || super[j] != x) return false;
    ++j;
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_pattern_coloring(const Hypergraph& h,
                                                      const Pattern& p) {
  std::vector<int> color(h.n(), -1);
  if (h.edge_count() == 0) {
    std::fill(color.begin(), color.end(), 0);
    return color;
  }
  if (p.edges.empty()) return std::nullopt;
  if (p.k() != h.k())
    throw std::invalid_argument("find_pattern_coloring: uniformity mismatch");

  std::vector<int> order(h.n());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
    return a < b;
  });

  // Colored-vertex multiset of edge e is compatible with some pattern edge?
  auto edge_ok = [&](const Edge& e) {
    std::vector<int> m;
    m.reserve(e.size());
    for (int v : e)
      if (color[v] >= 0) m.push_back(color[v]);
    std::sort(m.begin(), m.end());
    if (m.size() == e.size())
      return std::binary_search(p.edges.begin(), p.edges.end(), m);
    for (const auto& pe : p.edges)
      if (submultiset(m, pe)) return true;
    return false;
  };

  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == h.n()) return true;
    int v = order[idx];
    for (int c = 0; c < p.l; ++c) {
      color[v] = c;
      bool ok = true;
      for (int ei : h.incident(v))
        if (!edge_ok(h.edges()[ei])) {
          ok = false;
          break;
        }
      if (ok && self(self, idx + 1)) return true;
    }
    color[v] = -1;
    return false;
  };
  if (rec(rec, 0)) return color;
  return std::nullopt;
}

}  // namespace hyturan

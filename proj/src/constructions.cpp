#include "hyturan/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hyturan {

namespace {

// Part i (1-based) of turan_graph(n, l, k) as a [begin, end) label range.
std::vector<std::pair<int, int>> turan_parts(int n, int l) {
  std::vector<std::pair<int, int>> parts;
  int begin = 0;
  for (int i = 1; i <= l; ++i) {
    int size = (n + i - 1) / l;
    parts.emplace_back(begin, begin + size);
    begin += size;
  }
  return parts;
}

void check_turan_args(int n, int l, int k) {
  if (n < 0) throw std::invalid_argument("turan_graph: n must be >= 0");
  if (k < 2 || k > l) throw std::invalid_argument("turan_graph: need 2 <= k <= l");
}

}  // namespace

Hypergraph turan_graph(int n, int l, int k) {
  check_turan_args(n, l, k);
  auto parts = turan_parts(n, l);
  std::vector<Edge> edges;
  std::vector<int> chosen_parts;
  Edge edge;
  // Choose k parts, then one vertex from each.
  auto pick_vertices = [&](auto&& self, int idx) -> void {
    if (idx == k) {
      edges.push_back(edge);
      return;
    }
    auto [b, e] = parts[chosen_parts[idx]];
    for (int v = b; v < e; ++v) {
      edge.push_back(v);
      self(self, idx + 1);
      edge.pop_back();
    }
  };
  auto pick_parts = [&](auto&& self, int from) -> void {
    if (static_cast<int>(chosen_parts.size()) == k) {
      pick_vertices(pick_vertices, 0);
      return;
    }
    int need = k - static_cast<int>(chosen_parts.size());
    for (int p = from; p + need <= l; ++p) {
      chosen_parts.push_back(p);
      self(self, p + 1);
      chosen_parts.pop_back();
    }
  };
  pick_parts(pick_parts, 0);
  return Hypergraph(n, k, std::move(edges));
}

long long turan_edge_count(int n, int l, int k) {
  check_turan_args(n, l, k);
  // coeff[j] after processing some parts = sum over j-subsets of the sizes'
  // products; elementary symmetric polynomial DP.
  std::vector<long long> coeff(k + 1, 0);
  coeff[0] = 1;
  for (int i = 1; i <= l; ++i) {
    long long size = (n + i - 1) / l;
    for (int j = k; j >= 1; --j) coeff[j] += coeff[j - 1] * size;
  }
  return coeff[k];
}

double falling_factorial(int l, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= l - i;
  return r;
}

double turan_leading_term(int n, int l, int k) {
  check_turan_args(n, l, k);
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  return falling_factorial(l, k) / (kfact * std::pow(double(l), k)) *
         std::pow(double(n), k);
}

Hypergraph bipartite_like_complete(int n, int half_k) {
  if (n < 0) throw std::invalid_argument("bipartite_like_complete: n must be >= 0");
  if (half_k < 1) throw std::invalid_argument("bipartite_like_complete: half_k must be >= 1");
  int t = n / 2;
  std::vector<Edge> edges;
  std::vector<int> low, high;
  // all half_k-subsets of [from, to)
  auto subsets = [](int from, int to, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int at) -> void {
      if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
      }
      int need = size - static_cast<int>(cur.size());
      for (int v = at; v + need <= to; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, from);
    return out;
  };
  auto lows = subsets(0, t, half_k);
  auto highs = subsets(t, n, half_k);
  for (const auto& a : lows)
    for (const auto& b : highs) {
      Edge e = a;
      e.insert(e.end(), b.begin(), b.end());
      edges.push_back(std::move(e));
    }
  return Hypergraph(n, 2 * half_k, std::move(edges));
}

Hypergraph expansion(const Hypergraph& g, int k) {
  if (g.k() != 2) throw std::invalid_argument("expansion: input must be a 2-graph");
  if (k < 2) throw std::invalid_argument("expansion: k must be >= 2");
  if (k == 2) return g;
  std::vector<Edge> edges;
  int fresh = g.n();
  for (const Edge& e : g.edges()) {
    Edge big = e;
    for (int j = 0; j < k - 2; ++j) big.push_back(fresh++);
    edges.push_back(std::move(big));
  }
  return Hypergraph(fresh, k, std::move(edges));
}

Hypergraph extension(const Hypergraph& f) {
  int k = f.k();
  std::vector<Edge> edges = f.edges();
  int fresh = f.n();
  for (int i = 0; i < f.n(); ++i)
    for (int j = i + 1; j < f.n(); ++j) {
      bool covered = false;
      for (int ei : f.incident(i)) {
        const Edge& e = f.edges()[ei];
        if (std::find(e.begin(), e.end(), j) != e.end()) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      Edge e = {i, j};
      for (int c = 0; c < k - 2; ++c) e.push_back(fresh++);
      edges.push_back(std::move(e));
    }
  return Hypergraph(fresh, k, std::move(edges));
}

Hypergraph generalized_fan(int k) {
  if (k < 2) throw std::invalid_argument("generalized_fan: k must be >= 2");
  Edge base(k);
  for (int i = 0; i < k; ++i) base[i] = i;
  return extension(Hypergraph(k + 1, k, {base}));
}

Hypergraph generalized_triangle(int k) {
  if (k < 2) throw std::invalid_argument("generalized_triangle: k must be >= 2");
  Edge a, b, c;
  for (int i = 0; i < k - 1; ++i) {
    a.push_back(i);
    b.push_back(i);
  }
  a.push_back(k - 1);
  b.push_back(k);
  for (int i = k - 1; i <= 2 * k - 2; ++i) c.push_back(i);
  return Hypergraph(2 * k - 1, k, {a, b, c});
}

Hypergraph f4() { return Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}); }

Hypergraph f7() {
  return Hypergraph(7, 4, {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}, {3, 4, 5, 6}});
}

Hypergraph matching(int k, int t) {
  if (k < 2 || t < 0) throw std::invalid_argument("matching: need k >= 2, t >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < t; ++i) {
    Edge e;
    for (int j = 0; j < k; ++j) e.push_back(i * k + j);
    edges.push_back(std::move(e));
  }
  return Hypergraph(k * t, k, std::move(edges));
}

Hypergraph hyperstar(int k, int t) {
  if (k < 2 || t < 0) throw std::invalid_argument("hyperstar: need k >= 2, t >= 0");
  std::vector<Edge> star;
  for (int i = 1; i <= t; ++i) star.push_back({0, i});
  return expansion(Hypergraph(t + 1, 2, std::move(star)), k);
}

}  // namespace hyturan

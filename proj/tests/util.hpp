// Shared brute-force oracles for the unit tests. Everything here is
// deliberately naive (full enumeration) and only usable at tiny sizes; the
// library code under test must agree with it exactly.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "hyturan/hypergraph.hpp"
#include "hyturan/pattern.hpp"

namespace testutil {

using hyturan::Edge;
using hyturan::Hypergraph;
using hyturan::Pattern;

inline std::vector<Edge> all_k_subsets(int n, int k) {
  std::vector<Edge> out;
  Edge cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline Hypergraph random_hypergraph(int n, int k, double edge_prob,
                                    std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<Edge> edges;
  for (Edge& e : all_k_subsets(n, k))
    if (coin(rng)) edges.push_back(std::move(e));
  return Hypergraph(n, k, std::move(edges));
}

// Pattern colorability by full l^n enumeration.
inline std::optional<std::vector<int>> oracle_colorable(const Hypergraph& h,
                                                        const Pattern& p) {
  if (h.edge_count() == 0) return std::vector<int>(h.n(), 0);
  if (p.edges.empty()) return std::nullopt;
  std::vector<int> c(h.n(), 0);
  while (true) {
    bool ok = true;
    for (const Edge& e : h.edges()) {
      std::vector<int> colors;
      for (int v : e) colors.push_back(c[v]);
      std::sort(colors.begin(), colors.end());
      if (!std::binary_search(p.edges.begin(), p.edges.end(), colors)) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
    int i = 0;
    while (i < h.n() && ++c[i] == p.l) c[i++] = 0;
    if (i == h.n()) return std::nullopt;
  }
}

// Subgraph containment by enumerating every injection f -> h.
inline bool oracle_contains(const Hypergraph& h, const Hypergraph& f) {
  if (f.edge_count() == 0) return f.n() <= h.n();
  if (f.n() > h.n()) return false;
  std::vector<int> perm(h.n());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : f.edges()) {
      Edge img;
      for (int v : e) img.push_back(perm[v]);
      std::sort(img.begin(), img.end());
      if (!h.has_edge(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool oracle_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.k() != b.k() || a.edge_count() != b.edge_count())
    return false;
  return oracle_contains(a, b) && oracle_contains(b, a);
}

// Extremal edge count by enumerating all 2^C(n,k) graphs; also collects every
// extremal graph. Requires C(n,k) <= 20.
struct OracleEx {
  long long optimum = 0;
  std::vector<Hypergraph> extremal;
};

inline bool oracle_family_free(const Hypergraph& h,
                               const std::vector<Hypergraph>& family) {
  for (const Hypergraph& f : family)
    if (oracle_contains(h, f)) return false;
  return true;
}

inline OracleEx oracle_ex(int n, int k, const std::vector<Hypergraph>& family) {
  std::vector<Edge> all = all_k_subsets(n, k);
  if (all.size() > 20) throw std::runtime_error("oracle_ex: too many candidates");
  OracleEx out;
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) edges.push_back(all[i]);
    long long m = long(edges.size());
    if (m < out.optimum) continue;
    Hypergraph h(n, k, std::move(edges));
    if (!oracle_family_free(h, family)) continue;
    if (m > out.optimum) {
      out.optimum = m;
      out.extremal.clear();
    }
    out.extremal.push_back(std::move(h));
  }
  return out;
}

// Exact alpha-spectral radius of turan_graph(n, k, k) (one vertex per part in
// every edge): within-part-uniform weights are optimal for every alpha > 1,
// giving k! * (prod of part sizes)^(1 - 1/alpha) * k^(-k/alpha).
inline double oracle_lambda_balanced(int n, int k, double alpha) {
  double prod = 1.0, kfact = 1.0;
  for (int i = 1; i <= k; ++i) {
    prod *= (n + i - 1) / k;  // part sizes, ascending
    kfact *= i;
  }
  return kfact * std::pow(prod, 1.0 - 1.0 / alpha) *
         std::pow(double(k), -double(k) / alpha);
}

// Definition-level cancellative test: no A, B != C with A ∪ B == A ∪ C.
inline bool oracle_cancellative(const Hypergraph& h) {
  const auto& es = h.edges();
  for (const Edge& a : es)
    for (const Edge& b : es)
      for (const Edge& c : es) {
        if (b == c) continue;
        Edge ab, ac;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ab));
        std::set_union(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(ac));
        if (ab == ac) return false;
      }
  return true;
}

}  // namespace testutil

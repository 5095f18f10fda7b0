#include "hyturan/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "hyturan/containment.hpp"

namespace hyturan {

namespace {

// ---- canonical form ------------------------------------------------------

// (k-1)-subsets of {0..j-1} in colex order, for every j up to n.
std::vector<std::vector<std::vector<int>>> colex_tables(int n, int size) {
  std::vector<std::vector<std::vector<int>>> table(n + 1);
  // colex recursion: subsets ordered by largest element, then recursively
  auto gen = [](auto&& self, int limit, int sz) -> std::vector<std::vector<int>> {
    if (sz == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int m = sz - 1; m < limit; ++m)
      for (auto s : self(self, m, sz - 1)) {
        s.push_back(m);
        out.push_back(std::move(s));
      }
    return out;
  };
  for (int j = 0; j <= n; ++j) table[j] = gen(gen, j, size);
  return table;
}

std::string canonical_exact(const Hypergraph& h) {
  const int n = h.n(), k = h.k();
  std::vector<std::uint64_t> masks;
  masks.reserve(h.edge_count());
  for (const Edge& e : h.edges()) {
    std::uint64_t m = 0;
    for (int v : e) m |= 1ull << v;
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());

  auto tables = colex_tables(std::max(0, n - 1), k - 1);
  std::vector<int> cand(n);
  std::iota(cand.begin(), cand.end(), 0);
  std::sort(cand.begin(), cand.end(), [&](int a, int b) {
    if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
    return a < b;
  });

  std::string best, cur;
  bool best_set = false;
  std::vector<int> placed;  // old label per new label
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> void {
    int j = static_cast<int>(placed.size());
    if (j == n) {
      if (!best_set || cur > best) {
        best = cur;
        best_set = true;
      }
      return;
    }
    for (int ov : cand) {
      if (used[ov]) continue;
      used[ov] = 1;
      placed.push_back(ov);
      std::size_t mark = cur.size();
      for (const auto& sub : tables[j]) {
        std::uint64_t m = 1ull << ov;
        for (int t : sub) m |= 1ull << placed[t];
        bool present = std::binary_search(masks.begin(), masks.end(), m);
        cur.push_back(present ? '1' : '0');
      }
      // prune: a lexicographically smaller prefix cannot beat best
      bool viable = true;
      if (best_set &&
          cur.compare(0, cur.size(), best, 0, cur.size()) < 0)
        viable = false;
      if (viable) self(self);
      cur.resize(mark);
      placed.pop_back();
      used[ov] = 0;
    }
  };
  rec(rec);
  std::ostringstream out;
  out << "C|" << n << '|' << k << '|' << best;
  return out.str();
}

std::string canonical_hash(const Hypergraph& h) {
  auto fnv = [](std::uint64_t acc, std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      acc ^= (x >> (8 * b)) & 0xff;
      acc *= 1099511628211ull;
    }
    return acc;
  };
  std::uint64_t acc = 14695981039346656037ull;
  acc = fnv(acc, h.n());
  acc = fnv(acc, h.k());
  acc = fnv(acc, h.edge_count());
  std::vector<int> deg = h.degrees();
  std::sort(deg.begin(), deg.end());
  for (int d : deg) acc = fnv(acc, d);
  // multiset of per-edge sorted degree profiles
  std::vector<std::vector<int>> profiles;
  for (const Edge& e : h.edges()) {
    std::vector<int> p;
    for (int v : e) p.push_back(h.degree(v));
    std::sort(p.begin(), p.end());
    profiles.push_back(std::move(p));
  }
  std::sort(profiles.begin(), profiles.end());
  for (const auto& p : profiles)
    for (int d : p) acc = fnv(acc, d);
  std::ostringstream out;
  out << "H|" << h.n() << '|' << h.k() << '|' << std::hex << acc;
  return out.str();
}

// ---- shared search plumbing ---------------------------------------------

std::vector<Edge> all_k_subsets(int n, int k) {
  std::vector<Edge> out;
  Edge cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    int need = k - static_cast<int>(cur.size());
    for (int v = from; v + need <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void validate_family(int n, int k, const std::vector<Hypergraph>& family) {
  for (const Hypergraph& f : family) {
    if (f.edge_count() > 0 && f.k() != k)
      throw std::invalid_argument("search: family member of wrong uniformity");
    if (f.edge_count() == 0 && f.n() <= n)
      throw std::invalid_argument(
          "search: edgeless family member embeds in every graph");
  }
}

void check_cap(int n, int k, const SearchOptions& opts) {
  if (binomial(n, k) > 64 && !opts.override_cap)
    throw SearchCapError(
        "search: C(n,k) exceeds the 64-candidate cap; pass override_cap");
}

// Would adding e to the F-free graph (n, k, edges) stay F-free?
bool addition_free(int n, int k, std::vector<Edge> edges, const Edge& e,
                   const std::vector<Hypergraph>& family) {
  edges.push_back(e);
  Hypergraph g(n, k, std::move(edges));
  for (const Hypergraph& f : family)
    if (contains_sub_using_edge(g, f, e)) return false;
  return true;
}

}  // namespace

std::string canonical_form(const Hypergraph& h) {
  return h.n() <= 10 ? canonical_exact(h) : canonical_hash(h);
}

SearchResult ex_search(int n, int k, const std::vector<Hypergraph>& family,
                       const SearchOptions& opts) {
  if (n < 0 || k < 2) throw std::invalid_argument("ex_search: need n >= 0, k >= 2");
  validate_family(n, k, family);
  check_cap(n, k, opts);

  const std::vector<Edge> cands = all_k_subsets(n, k);
  const int m = static_cast<int>(cands.size());
  SearchResult result;
  result.spectral = false;

  std::vector<Edge> current;
  long long best = -1;
  std::map<std::string, Hypergraph> witnesses;

  auto rec = [&](auto&& self, int idx) -> void {
    ++result.nodes_explored;
    long long have = static_cast<long long>(current.size());
    if (have + (m - idx) < best) return;
    if (idx == m) {
      if (have > best) {
        best = have;
        witnesses.clear();
      }
      Hypergraph g(n, k, current);
      witnesses.emplace(canonical_form(g), std::move(g));
      return;
    }
    if (addition_free(n, k, current, cands[idx], family)) {
      current.push_back(cands[idx]);
      self(self, idx + 1);
      current.pop_back();
    }
    self(self, idx + 1);
  };
  rec(rec, 0);

  result.optimum_edges = best;
  result.complete = true;
  for (auto& [key, g] : witnesses) {
    if (!is_family_free(g, family) || g.edge_count() != best)
      throw std::logic_error("ex_search: witness failed re-verification");
    result.witnesses.push_back(std::move(g));
  }
  return result;
}

SearchResult spex_search(int n, int k, const std::vector<Hypergraph>& family,
                         double alpha, const SearchOptions& opts) {
  if (n < 1 || k < 2) throw std::invalid_argument("spex_search: need n >= 1, k >= 2");
  validate_family(n, k, family);
  check_cap(n, k, opts);

  const std::vector<Edge> cands = all_k_subsets(n, k);
  const int m = static_cast<int>(cands.size());
  SearchResult result;
  result.spectral = true;
  result.alpha = alpha;

  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  const double uniform_scale = kfact * std::pow(double(n), -double(k) / alpha);

  std::vector<Edge> current;
  std::vector<Edge> excluded_feasible;  // feasible at their decision time
  double best = -std::numeric_limits<double>::infinity();
  bool unsafe_used = false;
  std::vector<std::pair<double, Hypergraph>> near_best;

  auto rec = [&](auto&& self, int idx) -> void {
    ++result.nodes_explored;
    if (opts.unsafe_prune && std::isfinite(best)) {
      // Heuristic cut: P at the uniform vector of the largest reachable
      // superset. Not a certified upper bound on lambda; clears `complete`.
      double cap = uniform_scale * (current.size() + (m - idx));
      if (cap <= best) {
        unsafe_used = true;
        return;
      }
    }
    if (idx == m) {
      // Only inclusion-maximal F-free sets need solving (lambda is
      // edge-monotone). Edges that were infeasible when skipped stay
      // infeasible for this superset; re-test only the rest.
      for (const Edge& e : excluded_feasible)
        if (addition_free(n, k, current, e, family)) return;
      Hypergraph g(n, k, current);
      SolverOptions so = opts.solver;
      if (opts.threads > 1 && so.threads <= 1) so.threads = opts.threads;
      SpectralResult res = spectral_radius(g, alpha, so);
      result.solver_all_converged = result.solver_all_converged && res.converged;
      if (res.lambda > best) best = res.lambda;
      if (res.lambda >= best - 1e-9)
        near_best.emplace_back(res.lambda, std::move(g));
      return;
    }
    if (addition_free(n, k, current, cands[idx], family)) {
      current.push_back(cands[idx]);
      self(self, idx + 1);
      current.pop_back();
      excluded_feasible.push_back(cands[idx]);
      self(self, idx + 1);
      excluded_feasible.pop_back();
    } else {
      self(self, idx + 1);
    }
  };
  rec(rec, 0);

  result.optimum_lambda = best;
  result.complete = !unsafe_used;
  std::map<std::string, Hypergraph> witnesses;
  for (auto& [lambda, g] : near_best)
    if (lambda >= best - 1e-9) witnesses.emplace(canonical_form(g), std::move(g));
  for (auto& [key, g] : witnesses) {
    if (!is_family_free(g, family))
      throw std::logic_error("spex_search: witness failed re-verification");
    result.witnesses.push_back(std::move(g));
  }
  return result;
}

std::vector<TrendRow> density_trend(int k, const std::vector<Hypergraph>& family,
                                    int n_from, int n_to,
                                    const SearchOptions& opts) {
  if (n_from > n_to) throw std::invalid_argument("density_trend: empty range");
  std::vector<TrendRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    SearchResult r = ex_search(n, k, family, opts);
    long long total = binomial(n, k);
    rows.push_back({n, r.optimum_edges,
                    total > 0 ? double(r.optimum_edges) / double(total) : 0.0});
  }
  return rows;
}

}  // namespace hyturan

#include "hyturan/spectral.hpp"

#include "hyturan/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace hyturan {

const char* const kSolverVersion = "alpha-spectral-fixedpoint/1.0.0";

namespace {

constexpr double kTinyEntry = 1e-150;

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

struct KahanSum {
  double sum = 0.0, comp = 0.0;
  void add(double term) {
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// s_i = (k-1)! * sum_{e holds i} prod_{u in e minus i} x_u, via prefix/suffix
// products (no divisions, stable with zero entries).
void support_vector(const Hypergraph& h, const Eigen::ArrayXd& x, Eigen::ArrayXd& s) {
  const int k = h.k();
  s.setZero(h.n());
  std::vector<double> pre(k), suf(k);
  for (const Edge& e : h.edges()) {
    pre[0] = 1.0;
    for (int j = 1; j < k; ++j) pre[j] = pre[j - 1] * x[e[j - 1]];
    suf[k - 1] = 1.0;
    for (int j = k - 2; j >= 0; --j) suf[j] = suf[j + 1] * x[e[j + 1]];
    for (int j = 0; j < k; ++j) s[e[j]] += pre[j] * suf[j];
  }
  s *= factorial(k - 1);
}

void check_alpha(double alpha) {
  if (!(alpha > 1.0 + 1e-9))
    throw std::invalid_argument("alpha must exceed 1 + 1e-9");
}

struct StartOutcome {
  double lambda = -std::numeric_limits<double>::infinity();
  Eigen::ArrayXd x;
  long iterations = 0;
  bool converged = false;
};

// One fixed-point run on a connected component from a given start vector.
// Update: y_i = (s_i + sigma x_i^(alpha-1))^(1/(alpha-1)), then alpha-norm
// normalization. The shift sigma adapts to the current iterate (capped at
// k! * max degree) and is raised whenever P decreases, which damps
// oscillation; the best iterate by P is kept as a fallback.
StartOutcome solve_start(const Hypergraph& h, double alpha, Eigen::ArrayXd x,
                         double tol, long max_iter, double fixed_shift) {
  const int k = h.k();
  const double am1 = alpha - 1.0;
  const double inv_am1 = 1.0 / am1;
  const double shift_cap = factorial(k) * h.max_degree();
  double boost = 1.0;

  auto normalize = [&](Eigen::ArrayXd& v) {
    double nrm = std::pow(v.pow(alpha).sum(), 1.0 / alpha);
    v /= nrm;
  };
  normalize(x);

  Eigen::ArrayXd s(h.n());
  StartOutcome best;
  double lambda_prev = -std::numeric_limits<double>::infinity();
  long it = 0;
  for (it = 1; it <= max_iter; ++it) {
    support_vector(h, x, s);
    KahanSum p;
    for (int i = 0; i < h.n(); ++i) p.add(x[i] * s[i]);
    const double lambda = p.sum;  // == P(x) for unit x
    const double resid = (lambda * x.pow(am1) - s).abs().maxCoeff();

    if (lambda > best.lambda) {
      best.lambda = lambda;
      best.x = x;
    }
    const double scale = std::max(1.0, std::abs(lambda));
    if (std::abs(lambda - lambda_prev) <= 1e-13 * scale && resid <= tol) {
      // Certified stationary point; prefer it unless a transient iterate
      // attained a genuinely larger P value.
      if (lambda >= best.lambda - 1e-10 * scale) {
        best.lambda = lambda;
        best.x = x;
        best.converged = true;
      }
      break;
    }
    if (lambda < lambda_prev - 1e-13 * scale) boost = std::min(boost * 2.0, 1e12);
    lambda_prev = lambda;

    double sigma = fixed_shift > 0.0
                       ? fixed_shift
                       : shift_cap * std::min(1.0, boost * std::pow(x.maxCoeff(), k - 2));
    x = (s + sigma * x.pow(am1)).pow(inv_am1);
    normalize(x);
  }
  best.iterations = std::min(it, max_iter);
  return best;
}

Eigen::ArrayXd rounded(const Eigen::ArrayXd& x) {
  Eigen::ArrayXd r = x;
  for (int i = 0; i < r.size(); ++i) r[i] = std::round(r[i] * 1e12) / 1e12;
  return r;
}

bool lex_less(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) {
  for (int i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

struct ComponentSolve {
  double lambda = 0.0;
  Eigen::ArrayXd x;  // local labels
  long iterations = 0;
  bool converged = true;
};

ComponentSolve solve_component(const Hypergraph& sub, double alpha,
                               const SolverOptions& opts, int comp_index,
                               int starts, int threads) {
  std::vector<Eigen::ArrayXd> start_vectors(starts);
  start_vectors[0] = Eigen::ArrayXd::Ones(sub.n());
  for (int j = 1; j < starts; ++j) {
    std::seed_seq seq{static_cast<unsigned>(opts.seed & 0xffffffffu),
                      static_cast<unsigned>(opts.seed >> 32),
                      static_cast<unsigned>(comp_index),
                      static_cast<unsigned>(j)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> dist(0.05, 1.0);
    Eigen::ArrayXd v(sub.n());
    for (int i = 0; i < sub.n(); ++i) v[i] = dist(rng);
    start_vectors[j] = std::move(v);
  }

  std::vector<StartOutcome> outcomes(starts);
  auto run = [&](int j) {
    outcomes[j] = solve_start(sub, alpha, start_vectors[j], opts.tol,
                              opts.max_iter, opts.shift);
  };
  if (threads > 1 && starts > 1) {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(threads, starts);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int j = next.fetch_add(1); j < starts; j = next.fetch_add(1)) run(j);
      });
    for (auto& t : pool) t.join();
  } else {
    for (int j = 0; j < starts; ++j) run(j);
  }

  // Deterministic max-reduction in start order; exact lambda ties broken by
  // the lexicographically smaller vector rounded to 1e-12.
  int win = 0;
  for (int j = 1; j < starts; ++j) {
    if (outcomes[j].lambda > outcomes[win].lambda ||
        (outcomes[j].lambda == outcomes[win].lambda &&
         lex_less(rounded(outcomes[j].x), rounded(outcomes[win].x))))
      win = j;
  }
  ComponentSolve out;
  out.lambda = outcomes[win].lambda;
  out.x = outcomes[win].x;
  out.converged = outcomes[win].converged;
  for (const auto& o : outcomes) out.iterations += o.iterations;
  return out;
}

}  // namespace

double lagrangian_poly(const Hypergraph& h, const Eigen::ArrayXd& x) {
  if (x.size() != h.n())
    throw std::invalid_argument("lagrangian_poly: vector length != n");
  KahanSum sum;
  for (const Edge& e : h.edges()) {
    bool tiny = false;
    for (int v : e)
      if (x[v] >= 0.0 && x[v] < kTinyEntry) tiny = true;
    double p;
    if (!tiny) {
      p = 1.0;
      for (int v : e) p *= x[v];
    } else {
      bool zero = false;
      double lg = 0.0;
      for (int v : e) {
        if (x[v] == 0.0) {
          zero = true;
          break;
        }
        lg += std::log(x[v]);
      }
      p = zero ? 0.0 : std::exp(lg);
    }
    sum.add(p);
  }
  return factorial(h.k()) * sum.sum;
}

double eigen_residual(const Hypergraph& h, double alpha, double lambda,
                      const Eigen::ArrayXd& x) {
  check_alpha(alpha);
  if (x.size() != h.n())
    throw std::invalid_argument("eigen_residual: vector length != n");
  if (h.n() == 0) throw std::invalid_argument("eigen_residual: empty vertex set");
  Eigen::ArrayXd s(h.n());
  support_vector(h, x, s);
  return (lambda * x.pow(alpha - 1.0) - s).abs().maxCoeff();
}

double average_bound(const Hypergraph& h, double alpha) {
  check_alpha(alpha);
  if (h.n() == 0) throw std::invalid_argument("average_bound: empty vertex set");
  return factorial(h.k()) * std::pow(double(h.n()), -double(h.k()) / alpha) *
         h.edge_count();
}

SpectralResult spectral_radius(const Hypergraph& h, double alpha,
                               const SolverOptions& opts) {
  check_alpha(alpha);
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  if (h.n() == 0) throw std::invalid_argument("spectral_radius: empty vertex set");

  SpectralResult result;
  result.alpha = alpha;
  const int starts = std::max(1, opts.starts);
  result.starts_used = starts;
  int threads = opts.threads <= 0
                    ? std::max(1u, std::thread::hardware_concurrency())
                    : opts.threads;

  if (h.edge_count() == 0) {
    result.vector = Eigen::ArrayXd::Constant(
        h.n(), std::pow(double(h.n()), -1.0 / alpha));
    result.starts_used = 0;
    result.converged = true;
    return result;
  }

  auto comps = connected_components(h);
  struct Edged {
    VertexRemoval sub;
    ComponentSolve solve;
  };
  std::vector<Edged> edged;
  for (const auto& c : comps) {
    VertexRemoval sub = induced(h, c);
    if (sub.graph.edge_count() == 0) continue;
    edged.push_back({std::move(sub), {}});
  }
  for (int ci = 0; ci < static_cast<int>(edged.size()); ++ci) {
    edged[ci].solve = solve_component(edged[ci].sub.graph, alpha, opts, ci,
                                      starts, threads);
    result.iterations += edged[ci].solve.iterations;
  }

  Eigen::ArrayXd full = Eigen::ArrayXd::Zero(h.n());
  const int k = h.k();
  bool winners_converged = true;
  if (alpha <= k + 1e-9 || edged.size() == 1) {
    // The maximizer lives on a single component: strictly-better replaces,
    // so ties go to the earliest component.
    int win = 0;
    for (int ci = 1; ci < static_cast<int>(edged.size()); ++ci)
      if (edged[ci].solve.lambda > edged[win].solve.lambda) win = ci;
    const auto& w = edged[win];
    for (int i = 0; i < w.sub.graph.n(); ++i)
      full[w.sub.old_label[i]] = w.solve.x[i];
    winners_converged = w.solve.converged;
  } else {
    // For alpha > k mass spreads across components: the stationary split
    // weights component c by lambda_c^(alpha/(alpha-k)), normalized.
    double q = alpha / (alpha - k);
    double max_ln = -std::numeric_limits<double>::infinity();
    for (const auto& ecomp : edged)
      if (ecomp.solve.lambda > 0.0)
        max_ln = std::max(max_ln, q * std::log(ecomp.solve.lambda));
    double z = 0.0;
    std::vector<double> w(edged.size(), 0.0);
    for (std::size_t ci = 0; ci < edged.size(); ++ci)
      if (edged[ci].solve.lambda > 0.0) {
        w[ci] = std::exp(q * std::log(edged[ci].solve.lambda) - max_ln);
        z += w[ci];
      }
    for (std::size_t ci = 0; ci < edged.size(); ++ci) {
      if (w[ci] == 0.0) continue;
      double scale = std::pow(w[ci] / z, 1.0 / alpha);
      const auto& ecomp = edged[ci];
      for (int i = 0; i < ecomp.sub.graph.n(); ++i)
        full[ecomp.sub.old_label[i]] = scale * ecomp.solve.x[i];
      winners_converged = winners_converged && ecomp.solve.converged;
    }
  }

  double nrm = std::pow(full.pow(alpha).sum(), 1.0 / alpha);
  if (nrm > 0.0) full /= nrm;
  result.vector = std::move(full);
  result.lambda = lagrangian_poly(h, result.vector);
  result.residual = eigen_residual(h, alpha, result.lambda, result.vector);
  result.converged = winners_converged && result.residual <= opts.tol;
  return result;
}

double closed_form_multipartite(int n, int l, int k, double alpha) {
  check_alpha(alpha);
  if (k < 2 || k > l) throw std::invalid_argument("closed_form_multipartite: need 2 <= k <= l");
  if (n < 0 || n % l != 0)
    throw std::invalid_argument("closed_form_multipartite: requires l | n");
  return falling_factorial(l, k) / std::pow(double(l), k) *
         std::pow(double(n), k - double(k) / alpha);
}

double closed_form_b4(int n, double alpha) {
  check_alpha(alpha);
  if (n < 4) throw std::invalid_argument("closed_form_b4: requires n >= 4");
  double t = n / 2;      // floor
  double u = n - n / 2;  // ceil
  return 24.0 * std::pow(2.0, -4.0 / alpha) * (t * (t - 1) / 2.0) *
         (u * (u - 1) / 2.0) * std::pow(t, -2.0 / alpha) *
         std::pow(u, -2.0 / alpha);
}

}  // namespace hyturan

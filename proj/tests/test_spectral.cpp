#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hyturan/constructions.hpp"
#include "hyturan/spectral.hpp"
#include "util.hpp"

using namespace hyturan;

namespace {
Eigen::ArrayXd uniform_unit(int n, double alpha) {
  return Eigen::ArrayXd::Constant(n, std::pow(double(n), -1.0 / alpha));
}
}  // namespace

TEST_CASE("lagrangian polynomial") {
  Hypergraph h(4, 3, {{0, 1, 2}, {1, 2, 3}});
  Eigen::ArrayXd x(4);
  x << 0.5, 0.5, 0.5, 0.0;
  CHECK(lagrangian_poly(h, x) == doctest::Approx(6 * 0.125));
  x << 1, 2, 3, 4;
  CHECK(lagrangian_poly(h, x) == doctest::Approx(6 * (6.0 + 24.0)));
  // tiny entries switch an edge to log space without changing the value
  Eigen::ArrayXd tiny(4);
  tiny << 1e-160, 1e-160, 1e-160, 1.0;
  // the all-tiny edge (product 1e-480) underflows to zero even through logs;
  // the mixed edge survives as a subnormal
  double direct = 6 * (0.0 + 1e-320);
  CHECK(lagrangian_poly(h, tiny) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(lagrangian_poly(Hypergraph(3, 2, {}), uniform_unit(3, 2.0)) == 0.0);
}

TEST_CASE("average bound is the uniform-vector value") {
  Hypergraph h = turan_graph(6, 3, 3);
  CHECK(average_bound(h, 3.0) == doctest::Approx(8.0));
  CHECK(average_bound(h, 3.0) ==
        doctest::Approx(lagrangian_poly(h, uniform_unit(6, 3.0))));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    Hypergraph g = testutil::random_hypergraph(7, 3, 0.4, rng);
    for (double a : {1.5, 2.0, 4.0})
      CHECK(average_bound(g, a) ==
            doctest::Approx(lagrangian_poly(g, uniform_unit(7, a))).epsilon(1e-12));
  }
}

TEST_CASE("residual vanishes at an exact eigenpair") {
  Hypergraph h = turan_graph(6, 3, 3);  // uniform vector is exact here
  CHECK(eigen_residual(h, 3.0, 8.0, uniform_unit(6, 3.0)) <= 1e-12);
  CHECK(eigen_residual(h, 3.0, 7.5, uniform_unit(6, 3.0)) > 1e-3);
}

TEST_CASE("spot values") {
  SolverOptions opts;
  CHECK(spectral_radius(Hypergraph(2, 2, {{0, 1}}), 2.0, opts).lambda ==
        doctest::Approx(1.0));  // K2
  CHECK(spectral_radius(turan_graph(3, 3, 2), 2.0, opts).lambda ==
        doctest::Approx(2.0));  // K3
  CHECK(spectral_radius(turan_graph(4, 2, 2), 2.0, opts).lambda ==
        doctest::Approx(2.0));  // C4
  CHECK(spectral_radius(Hypergraph(3, 3, {{0, 1, 2}}), 2.0, opts).lambda ==
        doctest::Approx(6.0 * std::pow(3.0, -1.5)));
  CHECK(spectral_radius(Hypergraph(4, 4, {{0, 1, 2, 3}}), 4.0, opts).lambda ==
        doctest::Approx(6.0));
}

TEST_CASE("matches the balanced multipartite closed forms") {
  SolverOptions opts;
  for (int n : {6, 9, 12})
    for (double a : {1.5, 2.0, 3.0}) {
      auto res = spectral_radius(turan_graph(n, 3, 3), a, opts);
      CHECK(res.converged);
      CHECK(res.lambda ==
            doctest::Approx(closed_form_multipartite(n, 3, 3, a)).epsilon(1e-9));
      CHECK(res.lambda ==
            doctest::Approx(testutil::oracle_lambda_balanced(n, 3, a)).epsilon(1e-9));
    }
  // unbalanced part sizes still match the independent oracle
  for (int n : {7, 8, 10, 11})
    for (double a : {2.0, 3.0})
      CHECK(spectral_radius(turan_graph(n, 3, 3), a, opts).lambda ==
            doctest::Approx(testutil::oracle_lambda_balanced(n, 3, a)).epsilon(1e-9));
  CHECK_THROWS_AS(closed_form_multipartite(7, 3, 3, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_multipartite(6, 3, 4, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_b4(3, 2.0), std::invalid_argument);
}

TEST_CASE("disconnected graphs: winner selection below alpha = k") {
  SolverOptions opts;
  // two disjoint 3-edges at alpha = 3: all mass on one edge is optimal
  auto res = spectral_radius(matching(3, 2), 3.0, opts);
  CHECK(res.converged);
  CHECK(res.lambda == doctest::Approx(2.0));  // 6/3
  // support sits on the earliest component only
  CHECK(res.vector.head(3).minCoeff() > 0.1);
  CHECK(res.vector.tail(3).maxCoeff() == 0.0);
}

TEST_CASE("disconnected graphs: mass splitting above alpha = k") {
  SolverOptions opts;
  auto res = spectral_radius(matching(3, 2), 6.0, opts);
  CHECK(res.converged);
  CHECK(res.lambda == doctest::Approx(6.0 * std::sqrt(2.0 / 3.0)).epsilon(1e-10));
  CHECK(res.residual <= 1e-10);
  // equal components, equal masses
  CHECK(res.vector.head(3).sum() == doctest::Approx(res.vector.tail(3).sum()));
  // beats both the single-component value and the average bound
  CHECK(res.lambda > 6.0 * std::pow(3.0, -0.5));
  CHECK(res.lambda >= average_bound(matching(3, 2), 6.0) - 1e-12);
}

TEST_CASE("isolated vertices never carry weight") {
  SolverOptions opts;
  Hypergraph planted(8, 3, turan_graph(6, 3, 3).edges());
  auto res = spectral_radius(planted, 3.0, opts);
  CHECK(res.converged);
  CHECK(res.lambda == doctest::Approx(8.0));
  CHECK(res.vector[6] == 0.0);
  CHECK(res.vector[7] == 0.0);
}

TEST_CASE("solver options") {
  Hypergraph h = turan_graph(6, 3, 3);
  SolverOptions one;
  one.starts = 1;  // all-ones start alone suffices on a regular graph
  CHECK(spectral_radius(h, 3.0, one).lambda == doctest::Approx(8.0));

  SolverOptions a, b;
  auto ra1 = spectral_radius(f4(), 2.5, a);
  auto ra2 = spectral_radius(f4(), 2.5, a);
  CHECK(ra1.lambda == ra2.lambda);  // bitwise deterministic
  CHECK((ra1.vector == ra2.vector).all());

  b.seed = 123456;
  auto rb = spectral_radius(f4(), 2.5, b);
  CHECK(rb.lambda == doctest::Approx(ra1.lambda).epsilon(1e-9));

  SolverOptions threaded;
  threaded.threads = 4;
  auto rt = spectral_radius(f4(), 2.5, threaded);
  CHECK(rt.lambda == ra1.lambda);
  CHECK((rt.vector == ra1.vector).all());

  SolverOptions fixed;
  fixed.shift = 50.0;  // fixed damping still converges, just slower
  auto rf = spectral_radius(f4(), 2.5, fixed);
  CHECK(rf.converged);
  CHECK(rf.lambda == doctest::Approx(ra1.lambda).epsilon(1e-9));

  SolverOptions starving;
  starving.max_iter = 2;
  starving.starts = 1;
  auto rs = spectral_radius(f4(), 2.5, starving);
  CHECK(!rs.converged);  // reported, not thrown
  CHECK(rs.lambda > 0.0);
}

TEST_CASE("input validation and trivial graphs") {
  CHECK_THROWS_AS(spectral_radius(f4(), 1.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius(f4(), 0.5, {}), std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius(Hypergraph(0, 3, {}), 2.0, {}),
                  std::invalid_argument);
  auto res = spectral_radius(Hypergraph(3, 3, {}), 2.0, {});
  CHECK(res.converged);
  CHECK(res.lambda == 0.0);
  CHECK(res.vector.size() == 3);
}

TEST_CASE("certificates on random graphs") {
  std::mt19937_64 rng(99);
  SolverOptions opts;
  opts.starts = 4;
  for (int t = 0; t < 25; ++t) {
    Hypergraph h = testutil::random_hypergraph(4 + int(rng() % 5), 3, 0.35, rng);
    double a = (t % 2) ? 2.0 : 3.0;
    auto res = spectral_radius(h, a, opts);
    CHECK(res.converged);
    CHECK(res.residual <= opts.tol);
    CHECK(res.lambda >= average_bound(h, a) - 1e-9);
    CHECK(res.lambda == doctest::Approx(lagrangian_poly(h, res.vector)).epsilon(1e-12));
    // alpha-norm 1 unless the graph has no edges
    if (h.edge_count() > 0)
      CHECK(std::pow(res.vector.pow(a).sum(), 1.0 / a) == doctest::Approx(1.0));
  }
}

TEST_CASE("solver version string") {
  CHECK(std::string(kSolverVersion).find('/') != std::string::npos);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hyturan/constructions.hpp"
#include "util.hpp"

using namespace hyturan;

TEST_CASE("turan_graph small instances") {
  CHECK(turan_graph(5, 3, 3) ==
        Hypergraph(5, 3, {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4}}));
  // parts {0,1}, {2,3}, {4,5}: all one-per-part triples
  Hypergraph t6 = turan_graph(6, 3, 3);
  CHECK(t6.edge_count() == 8);
  for (const Edge& e : t6.edges()) {
    CHECK(e[0] / 2 == 0);
    CHECK(e[1] / 2 == 1);
    CHECK(e[2] / 2 == 2);
  }
  // k < l: pairs from distinct parts of {0},{1,2}: {0,1},{0,2},{1,2}... minus
  // within-part {1,2}
  CHECK(turan_graph(3, 2, 2) == Hypergraph(3, 2, {{0, 1}, {0, 2}}));
  CHECK(turan_graph(0, 3, 3).edge_count() == 0);
  CHECK_THROWS_AS(turan_graph(6, 2, 3), std::invalid_argument);  // k > l
  CHECK_THROWS_AS(turan_graph(6, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(turan_graph(-1, 3, 3), std::invalid_argument);
}

TEST_CASE("turan part sizes ascend and differ by at most one") {
  for (int l = 2; l <= 6; ++l)
    for (int n = 0; n <= 25; ++n) {
      // part i (1-based) has floor((n+i-1)/l) vertices
      int total = 0, prev = 0;
      for (int i = 1; i <= l; ++i) {
        int size = (n + i - 1) / l;
        CHECK(size >= prev);
        CHECK(size - (n / l) <= 1);
        prev = size;
        total += size;
      }
      CHECK(total == n);
    }
}

TEST_CASE("turan_edge_count equals enumeration") {
  for (int l = 2; l <= 6; ++l)
    for (int k = 2; k <= l; ++k)
      for (int n = 0; n <= 14; ++n)
        CHECK(turan_edge_count(n, l, k) == turan_graph(n, l, k).edge_count());
  // complete graph when every part is a single vertex
  CHECK(turan_edge_count(5, 5, 3) == binomial(5, 3));
  CHECK(turan_edge_count(6, 6, 6) == 1);
  // classic floor(n^2/4) for graphs
  for (int n = 2; n <= 40; ++n)
    CHECK(turan_edge_count(n, 2, 2) == (long long)(n) * n / 4);
}

TEST_CASE("leading term and falling factorial") {
  CHECK(falling_factorial(5, 3) == doctest::Approx(60.0));
  CHECK(falling_factorial(3, 3) == doctest::Approx(6.0));
  CHECK(turan_leading_term(10, 3, 3) == doctest::Approx(1000.0 / 27.0));
  CHECK(turan_leading_term(6, 3, 3) == doctest::Approx(8.0));  // exact at l | n
  CHECK(turan_edge_count(6, 3, 3) == 8);
  // exact agreement whenever l divides n, k in {2, 3}
  for (int l = 2; l <= 6; ++l)
    for (int k = 2; k <= std::min(l, 3); ++k)
      for (int n = l; n <= 60; n += l)
        CHECK(turan_leading_term(n, l, k) ==
              doctest::Approx(double(turan_edge_count(n, l, k))).epsilon(1e-12));
}

TEST_CASE("bipartite_like_complete") {
  Hypergraph b4 = bipartite_like_complete(6, 2);
  CHECK(b4.k() == 4);
  CHECK(b4.n() == 6);
  CHECK(b4.edge_count() == 9);  // C(3,2)^2
  for (const Edge& e : b4.edges()) {
    int low = 0;
    for (int v : e) low += v < 3;
    CHECK(low == 2);
  }
  CHECK(bipartite_like_complete(4, 2) == Hypergraph(4, 4, {{0, 1, 2, 3}}));
  CHECK(bipartite_like_complete(7, 2).edge_count() ==
        binomial(3, 2) * binomial(4, 2));
  CHECK(bipartite_like_complete(6, 3).k() == 6);
  // below 2*half_k vertices the construction degenerates to an edgeless graph
  CHECK(bipartite_like_complete(1, 2) == Hypergraph(1, 4, {}));
  CHECK(bipartite_like_complete(3, 2) == Hypergraph(3, 4, {}));
  CHECK_THROWS_AS(bipartite_like_complete(4, 0), std::invalid_argument);
}

TEST_CASE("expansion of a 2-graph") {
  Hypergraph k3(3, 2, {{0, 1}, {0, 2}, {1, 2}});
  Hypergraph e3 = expansion(k3, 3);
  CHECK(e3 == Hypergraph(6, 3, {{0, 1, 3}, {0, 2, 4}, {1, 2, 5}}));
  Hypergraph e4 = expansion(k3, 4);
  CHECK(e4 == Hypergraph(9, 4, {{0, 1, 3, 4}, {0, 2, 5, 6}, {1, 2, 7, 8}}));
  CHECK(expansion(k3, 2) == k3);
  CHECK_THROWS_AS(expansion(Hypergraph(4, 3, {{0, 1, 2}}), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(expansion(k3, 1), std::invalid_argument);
}

TEST_CASE("extension covers exactly the uncovered pairs") {
  Hypergraph single(4, 3, {{0, 1, 2}});
  Hypergraph ext = extension(single);
  CHECK(ext == Hypergraph(7, 3, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 3, 6}}));
  CHECK(ext == generalized_fan(3));

  // extending an already-covering graph is the identity
  Hypergraph k4(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(extension(k4) == k4);

  // for k = 2 no fresh vertices are needed: extension completes the graph
  Hypergraph p2(3, 2, {{0, 1}});
  CHECK(extension(p2) == Hypergraph(3, 2, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("generalized fan and triangle") {
  CHECK(generalized_fan(3).n() == 7);
  CHECK(generalized_fan(3).edge_count() == 4);
  CHECK(generalized_triangle(3) == Hypergraph(5, 3, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}));
  CHECK(generalized_triangle(4) ==
        Hypergraph(7, 4, {{0, 1, 2, 3}, {0, 1, 2, 4}, {3, 4, 5, 6}}));
  CHECK(generalized_triangle(2) == Hypergraph(3, 2, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK_THROWS_AS(generalized_triangle(1), std::invalid_argument);
}

TEST_CASE("fan edge arithmetic") {
  // Fan^k: base edge {0..k-1} plus apex k; the k uncovered pairs {i, k} each
  // get k-2 fresh vertices.
  for (int k = 3; k <= 5; ++k) {
    Hypergraph fan = generalized_fan(k);
    CHECK(fan.edge_count() == 1 + k);
    CHECK(fan.n() == (k + 1) + k * (k - 2));
  }
}

TEST_CASE("f4, f7, matching, hyperstar literals") {
  CHECK(f4() == Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));
  CHECK(f7() == Hypergraph(7, 4, {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}, {3, 4, 5, 6}}));
  CHECK(matching(3, 2) == Hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}}));
  CHECK(matching(2, 3) == Hypergraph(6, 2, {{0, 1}, {2, 3}, {4, 5}}));
  CHECK(hyperstar(3, 2) == Hypergraph(5, 3, {{0, 1, 3}, {0, 2, 4}}));
  CHECK(hyperstar(4, 1) == Hypergraph(4, 4, {{0, 1, 2, 3}}));
  CHECK_THROWS_AS(matching(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(hyperstar(1, 2), std::invalid_argument);
}

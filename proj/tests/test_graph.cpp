#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigid/graph.hpp"
#include "rigid/rigidity2d.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rigid;
using namespace rigid::testing;

TEST_CASE("graph construction rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Multigraph(2, {{1, 1}}), InvalidArgument);
  CHECK_NOTHROW(Multigraph(2, {{0, 1}, {1, 0}}));

  Graph g(4, {{2, 1}, {0, 3}});
  CHECK(g.edges() == std::vector<Edge>{Edge(0, 3), Edge(1, 2)});
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("kappa on the named examples") {
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(kappa(complete(4), u, v) == 3);
  CHECK(kappa(path(3), 0, 2) == 1);
  CHECK(kappa(cycle(4), 0, 2) == 2);
  CHECK(kappa(cycle(4), 0, 1) == 2);  // the edge itself plus the long way round
  CHECK_THROWS_AS(kappa(cycle(4), 1, 1), InvalidArgument);
}

TEST_CASE("kappa is symmetric and agrees with vertex-cut enumeration") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, 2, 9);
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v) {
        const int k = kappa(g, u, v);
        REQUIRE(k == kappa(g, v, u));
        REQUIRE(k == brute_kappa(g, u, v));
      }
  }
}

TEST_CASE("is_k_connected") {
  CHECK(is_k_connected(complete(4), 3));
  CHECK_FALSE(is_k_connected(cycle(4), 3));
  CHECK(is_k_connected(two_k4(), 2));
  CHECK(brute_k_connected(two_k4(), 2));
  CHECK_FALSE(is_k_connected(two_k4(), 3));
  CHECK_FALSE(is_k_connected(complete(3), 3));  // needs k+1 vertices
  CHECK_THROWS_AS(is_k_connected(cycle(4), 0), InvalidArgument);

  Rng rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(rng, 1, 9);
    for (int k = 1; k <= 3; ++k) REQUIRE(is_k_connected(g, k) == brute_k_connected(g, k));
  }
}

TEST_CASE("two_separators") {
  CHECK(two_separators(two_triangles_sharing_edge()) == std::vector<Edge>{Edge(0, 1)});
  CHECK(two_separators(complete(4)).empty());
  CHECK(brute_two_separators(two_k4()) == std::vector<Edge>{Edge(0, 1)});
  CHECK(two_separators(two_k4()) == std::vector<Edge>{Edge(0, 1)});
  CHECK_THROWS_AS(two_separators(path(4)), PreconditionViolation);

  Rng rng(3);
  int checked = 0;
  while (checked < 60) {
    Graph g = random_graph(rng, 3, 12);
    if (!brute_k_connected(g, 2)) continue;
    REQUIRE(two_separators(g) == brute_two_separators(g));
    ++checked;
  }
}

TEST_CASE("crossing separators") {
  Graph c4 = cycle(4);  // 0-1-2-3-0
  CHECK(crossing(c4, Edge(0, 2), Edge(1, 3)));
  CHECK(crossing(c4, Edge(1, 3), Edge(0, 2)));
  CHECK_THROWS_AS(crossing(two_k4(), Edge(0, 1), Edge(2, 3)), PreconditionViolation);

  // two K4 sharing an edge: one separator, nothing to cross
  CHECK(two_separators(two_k4()).size() == 1);
  CHECK_FALSE(crossing(two_k4(), Edge(0, 1), Edge(0, 1)));
}

TEST_CASE("no crossing separators in R2-connected graphs") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Graph h = random_r2_connected(rng, uniform(rng, 2, 4));
    REQUIRE(is_r2_connected(h));
    const auto seps = two_separators(h);
    for (const Edge& s1 : seps)
      for (const Edge& s2 : seps) REQUIRE_FALSE(crossing(h, s1, s2));
  }
}

TEST_CASE("vertex partitions") {
  VertexPartition p{{{0, 2}, {1}}};
  CHECK(p.is_valid(3));
  CHECK_FALSE(p.is_valid(4));
  CHECK_FALSE(VertexPartition{{{0, 1}, {1, 2}}}.is_valid(3));
  CHECK(p.part_of(3) == std::vector<int>{0, 1, 0});
}

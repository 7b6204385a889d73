#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigid/bodybar.hpp"
#include "rigid/decomposition.hpp"
#include "rigid/numeric.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace rigid;
using namespace rigid::testing;

namespace {

Multigraph parallel(int copies) {
  std::vector<Edge> edges(static_cast<std::size_t>(copies), Edge(0, 1));
  return Multigraph(2, edges);
}

Multigraph doubled(const Graph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back(e);
    edges.push_back(e);
  }
  return Multigraph(g.n(), edges);
}

Multigraph as_multigraph(const Graph& g) { return Multigraph(g.n(), g.edges()); }

bool brute_highly(const Multigraph& h, int k) {
  if (h.n() <= 1) return true;
  if (h.m() == 0) return false;
  for (std::size_t e = 0; e < h.m(); ++e)
    if (!brute_tree_connected(h.without_edge(e), k, false)) return false;
  return true;
}

// Generically rigid in R^d by the numeric rank.
bool numeric_rigid(const Graph& g, int d) {
  const long n = g.n();
  const long full = n >= d + 1 ? d * n - d * (d + 1) / 2 : n * (n - 1) / 2;
  return static_cast<long>(numeric_rank(g, d, 11)) == full;
}

}  // namespace

TEST_CASE("matroid union rank on named multigraphs") {
  // Values frozen from the branch-and-bound oracle.
  CHECK(matroid_union_rank(parallel(3), 3) == 3);
  CHECK(brute_union_rank(parallel(3), 3) == 3);
  CHECK(matroid_union_rank(parallel(4), 3) == 3);
  CHECK(matroid_union_rank(as_multigraph(complete(4)), 2) == 6);
  CHECK(brute_union_rank(as_multigraph(complete(4)), 2) == 6);
  CHECK(matroid_union_rank(as_multigraph(complete(4)), 1) == 3);
  CHECK(matroid_union_rank(Multigraph(3), 2) == 0);

  auto state = union_forests(as_multigraph(complete(4)), 2);
  REQUIRE(state.forests.size() == 2);
  for (const auto& forest : state.forests) {
    std::vector<int> root{0, 1, 2, 3};
    for (std::size_t id : forest) CHECK(forest_insert(root, as_multigraph(complete(4)).edge(id)));
  }
}

TEST_CASE("matroid union rank agrees with exhaustive assignment") {
  Rng rng(13);
  for (int trial = 0; trial < 90; ++trial) {
    const int n = uniform(rng, 2, 5);
    const int m = uniform(rng, n - 1, 10);
    Multigraph h = random_multigraph(rng, n, m);
    const int k = 1 + trial % 3;
    auto state = union_forests(h, k);
    REQUIRE(static_cast<int>(state.rank()) == brute_union_rank(h, k));
    std::vector<char> used(h.m(), 0);
    for (const auto& forest : state.forests) {
      std::vector<int> root(static_cast<std::size_t>(n));
      std::iota(root.begin(), root.end(), 0);
      for (std::size_t id : forest) {
        REQUIRE_FALSE(used[id]);
        used[id] = 1;
        REQUIRE(forest_insert(root, h.edge(id)));
      }
    }
  }
}

TEST_CASE("coloops of the union matroid") {
  std::vector<Edge> edges = complete(5).edges();
  edges.emplace_back(4, 5);
  Multigraph h(6, edges);
  CHECK(matroid_union_rank(h, 2) == 9);
  CHECK(brute_union_rank(h, 2) == 9);
  CHECK(mk_bridges(h, 2) == std::vector<std::size_t>{10});

  Rng rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph g = random_multigraph(rng, uniform(rng, 2, 5), uniform(rng, 2, 9));
    const int k = uniform(rng, 1, 3);
    const int r = brute_union_rank(g, k);
    std::vector<std::size_t> expected;
    for (std::size_t e = 0; e < g.m(); ++e)
      if (brute_union_rank(g.without_edge(e), k) < r) expected.push_back(e);
    REQUIRE(mk_bridges(g, k) == expected);
  }
}

TEST_CASE("tree connectivity") {
  CHECK(is_k_tree_connected(as_multigraph(complete(4)), 2));
  CHECK_FALSE(is_k_tree_connected(as_multigraph(complete(4)), 3));
  CHECK(is_k_tree_connected(parallel(3), 3));
  CHECK_FALSE(is_highly_k_tree_connected(parallel(3), 3));
  CHECK(is_highly_k_tree_connected(parallel(4), 3));
  CHECK(is_k_tree_connected(doubled(complete(4)), 3));
  CHECK(is_highly_k_tree_connected(doubled(path(3)), 1));
  CHECK(is_k_tree_connected(Multigraph(1), 5));
  CHECK(is_highly_k_tree_connected(Multigraph(1), 5));

  Rng rng(15);
  for (int trial = 0; trial < 80; ++trial) {
    Multigraph h = random_multigraph(rng, uniform(rng, 2, 5), uniform(rng, 1, 10));
    const int k = uniform(rng, 1, 3);
    REQUIRE(is_k_tree_connected(h, k) == brute_tree_connected(h, k, false));
    REQUIRE(is_highly_k_tree_connected(h, k) == brute_highly(h, k));
  }
}

TEST_CASE("superbricks") {
  {
    auto bricks = superbricks(parallel(4), 3);
    CHECK(bricks.bridges.empty());
    CHECK(bricks.parts.parts == std::vector<VertexSet>{{0, 1}});
  }
  {
    auto bricks = superbricks(parallel(3), 3);
    CHECK(bricks.bridges == std::vector<std::size_t>{0, 1, 2});
    CHECK(bricks.parts.parts == std::vector<VertexSet>{{0}, {1}});
  }
  Rng rng(16);
  for (int trial = 0; trial < 60; ++trial) {
    Multigraph h = random_multigraph(rng, uniform(rng, 2, 5), uniform(rng, 1, 9));
    const int k = uniform(rng, 1, 3);
    auto bricks = superbricks(h, k);
    REQUIRE(bricks.parts.is_valid(h.n()));
    REQUIRE(bricks.bridges == mk_bridges(h, k));
    // Every non-bridge edge lies inside a part; every part is connected by non-bridges.
    const auto part = bricks.parts.part_of(h.n());
    for (std::size_t e = 0; e < h.m(); ++e) {
      const bool bridge = std::binary_search(bricks.bridges.begin(), bricks.bridges.end(), e);
      if (!bridge) REQUIRE(part[static_cast<std::size_t>(h.edge(e).u)] == part[static_cast<std::size_t>(h.edge(e).v)]);
    }
  }
}

TEST_CASE("body-bar construction") {
  {
    auto bb = body_bar_construct(parallel(3));
    CHECK(bb.graph.n() == 6);
    CHECK(bb.graph.m() == 9);
    CHECK(bb.body(0) == VertexSet{0, 1, 2});
    CHECK(bb.body(1) == VertexSet{3, 4, 5});
    CHECK(bb.bars == std::vector<Edge>{Edge(0, 3), Edge(1, 4), Edge(2, 5)});
    CHECK(bb.host(4) == 1);
  }
  {
    auto bb = body_bar_construct(Multigraph(2, {{0, 1}}));
    CHECK(bb.graph == complete(2));
  }
  {
    auto bb = body_bar_construct(as_multigraph(path(3)));
    CHECK(bb.graph.n() == 4);
    CHECK(bb.graph.m() == 3);
  }
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    Multigraph h = random_multigraph(rng, uniform(rng, 2, 5), uniform(rng, 1, 9));
    auto bb = body_bar_construct(h);
    std::size_t expected_edges = h.m();
    for (Vertex w = 0; w < h.n(); ++w) {
      const auto d = static_cast<std::size_t>(h.degree(w));
      expected_edges += d * (d - 1) / 2;
      REQUIRE(bb.body(w).size() == d);
    }
    REQUIRE(bb.graph.m() == expected_edges);
    REQUIRE(bb.graph.n() == static_cast<int>(2 * h.m()));
    for (std::size_t e = 0; e < h.m(); ++e) {
      const Edge& bar = bb.bars[e];
      REQUIRE(Edge(bb.host(bar.u), bb.host(bar.v)) == h.edge(e));
    }
  }
}

TEST_CASE("body-bar rigidity") {
  CHECK(is_rigid_bodybar(parallel(3), 2));
  CHECK_FALSE(is_globally_rigid_bodybar(parallel(3), 2));
  CHECK(is_globally_rigid_bodybar(parallel(4), 2));
  CHECK_FALSE(is_rigid_bodybar(parallel(4), 3));
  CHECK(is_globally_rigid_bodybar(parallel(7), 3));
  CHECK_THROWS_AS(is_rigid_bodybar(Multigraph(2, {{0, 1}}), 2), PreconditionViolation);
  CHECK_THROWS_AS(is_rigid_bodybar(parallel(3), 0), PreconditionViolation);
}

TEST_CASE("tree connectivity matches the numeric rank of the body-bar graph") {
  Rng rng(18);
  int checked = 0;
  while (checked < 60) {
    const int d = 2 + checked % 2;
    Multigraph h = random_multigraph(rng, uniform(rng, 2, 4), uniform(rng, 2, 9));
    bool thick = true;
    for (Vertex w = 0; w < h.n(); ++w) thick = thick && h.degree(w) >= d;
    if (!thick) continue;
    auto bb = body_bar_construct(h);
    REQUIRE(is_rigid_bodybar(h, d) == numeric_rigid(bb.graph, d));
    ++checked;
  }
}

TEST_CASE("body-bar linked pairs") {
  BodyBarLinkedPairs three(parallel(3), 2);
  CHECK(three.linked(0, 3));
  CHECK(three.linked(0, 1));
  CHECK_FALSE(three.linked(0, 4));
  BodyBarLinkedPairs four(parallel(4), 2);
  CHECK(four.linked(0, 5));
  CHECK_THROWS_AS(three.linked(0, 0), InvalidArgument);
  CHECK_THROWS_AS(three.linked(0, 6), InvalidArgument);
}

TEST_CASE("planar body-bar linked pairs match the planar characterization") {
  Rng rng(19);
  int checked = 0;
  while (checked < 60) {
    Multigraph h = random_multigraph(rng, uniform(rng, 2, 4), uniform(rng, 2, 8));
    bool thick = true;
    for (Vertex w = 0; w < h.n(); ++w) thick = thick && h.degree(w) >= 2;
    if (!thick) continue;
    BodyBarLinkedPairs pairs(h, 2);
    LinkedPairs planar(pairs.body_bar().graph);
    const int n = pairs.body_bar().graph.n();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) REQUIRE(pairs.linked(u, v) == planar.linked(u, v));
    ++checked;
  }
}

TEST_CASE("body-bar graph rank splits into bodies and the union rank") {
  Rng rng(20);
  int checked = 0;
  while (checked < 60) {
    const int d = 1 + checked % 3;
    Multigraph h = random_multigraph(rng, uniform(rng, 2, 4), uniform(rng, 2, 8));
    long expected = static_cast<long>(matroid_union_rank(h, bodybar_trees(d)));
    bool thick = true;
    for (Vertex w = 0; w < h.n(); ++w) {
      thick = thick && h.degree(w) >= d;
      expected += d * static_cast<long>(h.degree(w)) - d * (d + 1) / 2;
    }
    if (!thick) continue;
    REQUIRE(static_cast<long>(numeric_rank(body_bar_construct(h).graph, d, 21)) == expected);
    ++checked;
  }
}

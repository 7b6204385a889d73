#pragma once

#include <cstddef>
#include <vector>

#include "rigid/graph.hpp"

namespace rigid {

/// k edge-disjoint forests of a multigraph whose union is a basis of the
/// union of k copies of its cycle matroid.
struct UnionMatroidState {
  int k = 0;
  std::vector<std::vector<std::size_t>> forests;  // edge ids, ascending

  std::size_t rank() const;
};

/// Matroid partition by shortest augmenting paths in the exchange graph.
UnionMatroidState union_forests(const Multigraph& h, int k);
std::size_t matroid_union_rank(const Multigraph& h, int k);

/// Coloops of M_k(H): edges whose deletion drops the union rank.
std::vector<std::size_t> mk_bridges(const Multigraph& h, int k);

struct SuperbrickPartition {
  VertexPartition parts;            // connected components of (V, E - F)
  std::vector<std::size_t> bridges;  // F
};

SuperbrickPartition superbricks(const Multigraph& h, int k);

/// k edge-disjoint spanning trees exist (a single vertex always qualifies).
bool is_k_tree_connected(const Multigraph& h, int k);
/// H - e is k-tree-connected for every edge e (and H has an edge when |V| >= 2).
bool is_highly_k_tree_connected(const Multigraph& h, int k);

/// Simple graph obtained by blowing every vertex w up into a complete body on
/// deg(w) vertices (one per incident edge, by edge id) joined by disjoint bars.
struct BodyBarGraph {
  Graph graph;
  std::vector<std::pair<Vertex, int>> body_of;  // G_H vertex -> (host vertex, slot)
  std::vector<Vertex> body_start;               // host vertex -> first G_H vertex
  std::vector<Edge> bars;                       // host edge id -> bar

  Vertex host(Vertex x) const { return body_of[x].first; }
  VertexSet body(Vertex w) const;
};

BodyBarGraph body_bar_construct(const Multigraph& h);

/// C(d+1, 2), the number of trees needed in dimension d.
int bodybar_trees(int d);

bool is_rigid_bodybar(const Multigraph& h, int d);
bool is_globally_rigid_bodybar(const Multigraph& h, int d);
/// u, v are vertices of body_bar_construct(h).
bool is_globally_linked_bodybar(const Multigraph& h, int d, Vertex u, Vertex v);

/// Query object reusing one construction and one superbrick partition.
class BodyBarLinkedPairs {
 public:
  BodyBarLinkedPairs(const Multigraph& h, int d);

  bool linked(Vertex u, Vertex v) const;
  const BodyBarGraph& body_bar() const { return body_bar_; }
  const SuperbrickPartition& bricks() const { return bricks_; }

 private:
  BodyBarGraph body_bar_;
  SuperbrickPartition bricks_;
  std::vector<int> part_of_;
};

}  // namespace rigid

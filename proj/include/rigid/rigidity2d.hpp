#pragma once

#include <vector>

#include "rigid/graph.hpp"

namespace rigid {

/// Incremental (2,3)-sparsity certificate (the pebble game).
///
/// Every vertex holds two pebbles; an accepted edge consumes one pebble from
/// its tail and is oriented tail -> head. An edge uv is accepted iff four
/// pebbles can be gathered on {u,v} by reversing directed paths, which is
/// exactly R2-independence of the accepted set plus uv.
///
/// Invariant: pebbles(v) + outdegree(v) == 2 for every vertex.
class PebbleGame {
 public:
  explicit PebbleGame(int n);
  /// Plays every edge of g in canonical order.
  explicit PebbleGame(const Graph& g);

  /// Inserts e if it keeps the accepted set independent. Returns whether it did.
  bool try_insert(const Edge& e);
  /// Whether try_insert(e) would accept, without changing this state.
  bool would_accept(const Edge& e) const;

  int n() const { return static_cast<int>(pebbles_.size()); }
  const std::vector<Edge>& accepted() const { return accepted_; }
  const std::vector<Edge>& rejected() const { return rejected_; }
  int pebbles(Vertex v) const { return pebbles_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  /// Heads of edges oriented out of v.
  const std::vector<Vertex>& out_edges(Vertex v) const { return out_[v]; }

  /// Re-checks the pebble/out-degree invariant and that the orientation
  /// covers exactly the accepted edges.
  bool invariants_hold() const;

 private:
  bool gather(Vertex target, Vertex blocked);

  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<Edge> accepted_;
  std::vector<Edge> rejected_;
};

/// r2(E(G)).
int r2_rank(const Graph& g);
/// r2 of an arbitrary edge list on vertices 0..n-1.
int r2_rank(int n, std::span<const Edge> edges);

bool is_r2_independent(const Graph& g);
/// n <= 1: true; otherwise r2(G) == 2n-3.
bool is_rigid_2d(const Graph& g);
bool is_redundantly_rigid_2d(const Graph& g);

/// The unique R2-circuit inside accepted(state) + e containing e, in canonical
/// edge order. Throws InvalidArgument when e would be accepted.
std::vector<Edge> fundamental_circuit(const PebbleGame& state, const Edge& e);

struct R2Component {
  std::vector<Edge> edges;  // canonical order
  VertexSet vertices;
  bool trivial = false;     // single edge, i.e. an R2-bridge
};

/// Connected components of the rigidity matroid R2(G).
struct R2Decomposition {
  std::vector<R2Component> components;  // ordered by first edge
  std::vector<int> component_of_edge;   // aligned with G.edges()

  std::vector<Edge> bridges() const;
  std::size_t non_trivial_count() const;
};

R2Decomposition r2_components(const Graph& g);
std::vector<Edge> r2_bridges(const Graph& g);

/// R2(G) has exactly one component (G has at least one edge).
bool is_r2_connected(const Graph& g);

/// Vertices of `part` that have a neighbour in g outside `part`.
VertexSet attachment_vertices(const Graph& g, const VertexSet& part);

}  // namespace rigid

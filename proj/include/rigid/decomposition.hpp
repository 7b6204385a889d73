#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rigid/graph.hpp"
#include "rigid/rigidity2d.hpp"

namespace rigid {

struct Block {
  VertexSet vertices;
  std::vector<Edge> edges;          // includes virtual edges
  std::vector<Edge> virtual_edges;  // separator edges absent from the host
};

struct SeparatorMultiplicity {
  Edge pair;
  int blocks = 0;  // number of 3-blocks containing both vertices
};

/// 3-blocks of an R2-connected graph, with separator bookkeeping.
struct ThreeBlockTree {
  std::vector<Block> blocks;                      // sorted by vertex set
  std::vector<SeparatorMultiplicity> separators;  // every 2-separator of the host
  int k = 0;                                      // sum over separators of (blocks - 1)

  std::vector<VertexSet> vertex_sets() const;
};

/// Cleaves the augmented graph recursively along 2-separators until every
/// piece is 3-connected. Throws PreconditionViolation unless h is
/// R2-connected, spans all its vertices and has at least four of them.
ThreeBlockTree three_blocks(const Graph& h);

/// A 2-shellable ordering of the blocks whose first block induces `designated`.
/// Throws InvalidArgument if no block contains both endpoints.
std::vector<std::size_t> block_shelling(const ThreeBlockTree& tree, const Edge& designated);

// -- shellability -----------------------------------------------------------

/// Whether `order` (a permutation of sets) satisfies
/// |(X_1 u ... u X_{j-1}) n X_j| <= m for every j >= 2.
bool is_m_shellable(std::span<const VertexSet> sets, std::span<const std::size_t> order, int m);

/// Exact search for an m-shellable ordering (memoised over placed subsets).
/// When `first` is given the ordering must start with that set.
/// Supports at most 63 sets.
std::optional<std::vector<std::size_t>> shellable_ordering(std::span<const VertexSet> sets, int m,
                                                           std::optional<std::size_t> first = {});

// -- globally linked pairs ------------------------------------------------------

/// Why a pair is globally 2-linked.
struct LinkWitness {
  bool is_edge = false;
  int component = -1;  // R2-component index when !is_edge
};

/// Answers globally-2-linked queries against one precomputed R2 decomposition.
class LinkedPairs {
 public:
  explicit LinkedPairs(const Graph& g);

  std::optional<LinkWitness> witness(Vertex u, Vertex v) const;
  bool linked(Vertex u, Vertex v) const { return witness(u, v).has_value(); }

  const Graph& graph() const { return graph_; }
  const R2Decomposition& decomposition() const { return decomposition_; }

 private:
  Graph graph_;
  R2Decomposition decomposition_;
  std::vector<Relabelled> subgraphs_;  // one per component; empty graph for bridges
  std::vector<std::vector<int>> components_at_;  // non-trivial components per vertex
};

bool is_globally_linked_2d(const Graph& g, Vertex u, Vertex v);
bool is_globally_linked_1d(const Graph& g, Vertex u, Vertex v);

/// Non-adjacent globally 2-linked pairs, lexicographic.
std::vector<Edge> linked_closure_additions(const Graph& g);
/// glc2(G): g plus an edge for every non-adjacent globally 2-linked pair.
Graph globally_linked_closure(const Graph& g);

// -- clusters and the cover identity --------------------------------------------

struct ClusterCover {
  std::vector<VertexSet> clusters;                     // size >= 4, sorted
  std::vector<int> cluster_component;                  // R2-component of each cluster
  std::vector<Edge> uncovered;                         // F
  std::vector<SeparatorMultiplicity> multiplicities;   // pairs in >= 2 clusters
  std::vector<std::size_t> ordering;                   // 3-shellable

  int rank = 0;          // r2(G) from the pebble game
  int identity_rhs = 0;  // |F| + sum(2|C|-3) - sum(h-1)
  bool identity_holds() const { return rank == identity_rhs; }
};

/// Globally 2-linked clusters of size >= 4 (the R2-blocks), the uncovered
/// edges and a 3-shellable ordering built by peeling components with at most
/// two attachment vertices. Throws OracleDisagreement if an internal
/// cross-check fails.
ClusterCover globally_linked_clusters(const Graph& g);

// -- global rigidity and localisation -------------------------------------------

struct GlobalRigidityReport {
  bool globally_rigid = false;
  bool three_connected = false;
  bool r2_connected = false;
};

GlobalRigidityReport global_rigidity_2d(const Graph& g);
bool is_globally_rigid_2d(const Graph& g);

/// Whether `target` is uniquely localizable in the plane given pinned
/// `anchors`. Throws InvalidArgument if target is an anchor.
bool uniquely_localizable(const Graph& g, std::span<const Vertex> anchors, Vertex target);

}  // namespace rigid

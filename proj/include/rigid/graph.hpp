#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "rigid/errors.hpp"

namespace rigid {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // kept sorted and duplicate free

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple loopless undirected graph on vertices 0..n-1.
///
/// Edges are stored in canonical (lexicographic) order; every algorithm that
/// iterates over edges sees the same order, which keeps results reproducible.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw InvalidArgument("negative vertex count");
  }
  /// Throws InvalidArgument on loops, parallel edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_vertex(Vertex v) const { return v >= 0 && v < n_; }
  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  bool is_complete() const;

  /// Index of `e` in edges(), or -1.
  long edge_index(const Edge& e) const;

  Graph with_edge(const Edge& e) const;
  Graph without_edge(const Edge& e) const;
  /// Same vertex set, only the given edges (which must be edges of this graph or valid pairs).
  Graph with_edges(std::span<const Edge> edges) const { return Graph(n_, edges); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void validate_and_insert(std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// A subgraph relabelled onto dense ids 0..k-1, with the map back to the host.
struct Relabelled {
  Graph graph;
  std::vector<Vertex> to_host;    // local id -> host id
  std::vector<Vertex> to_local;   // host id -> local id or -1

  Vertex local(Vertex host) const { return to_local[static_cast<std::size_t>(host)]; }
};

/// Subgraph induced by `vertices` in `g`.
Relabelled induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// Subgraph formed by `edges` (vertex set = their endpoints), relabelled.
Relabelled edge_subgraph(int host_n, std::span<const Edge> edges);

/// Loopless multigraph; edge ids are the dense indices 0..m-1 of edges().
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : n_(n) {
    if (n < 0) throw InvalidArgument("negative vertex count");
  }
  Multigraph(int n, std::vector<Edge> edges);
  Multigraph(int n, std::initializer_list<std::pair<int, int>> edges);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }
  int degree(Vertex w) const;
  /// Ids of edges incident with w, ascending.
  std::vector<std::size_t> incident(Vertex w) const;

  Multigraph without_edge(std::size_t id) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Disjoint non-empty vertex sets covering 0..n-1.
struct VertexPartition {
  std::vector<VertexSet> parts;

  std::size_t size() const { return parts.size(); }
  /// part index for each vertex
  std::vector<int> part_of(int n) const;
  bool is_valid(int n) const;
};

/// Connected components of `g` with the vertices in `removed` deleted.
/// Returns a component label per vertex (-1 for removed vertices) and the count.
std::pair<std::vector<int>, int> components_without(const Graph& g,
                                                   std::span<const Vertex> removed = {});

bool is_connected(const Graph& g);

/// kappa_G(u,v): maximum number of pairwise internally vertex-disjoint u-v paths.
/// A direct edge uv counts as one path. Throws InvalidArgument if u == v.
int kappa(const Graph& g, Vertex u, Vertex v);

/// True iff n >= k+1 and deleting fewer than k vertices never disconnects g.
bool is_k_connected(const Graph& g, int k);

/// All pairs {a,b} whose removal disconnects g, in lexicographic order.
/// Throws PreconditionViolation unless g is 2-connected.
std::vector<Edge> two_separators(const Graph& g);

/// Whether the pair {a,b} separates g (g - {a,b} disconnected).
bool is_separator(const Graph& g, const Edge& pair);

/// Whether 2-separator s1 is split by s2, i.e. the vertices of s1 lie in
/// different components of g - s2. Throws PreconditionViolation unless both
/// pairs are 2-separators of g.
bool crossing(const Graph& g, const Edge& s1, const Edge& s2);

}  // namespace rigid

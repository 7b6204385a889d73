#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "rigid/graph.hpp"

namespace rigid {

using Coordinates = std::vector<mpq_class>;

/// A realization of a graph in R^d with exact rational coordinates.
struct Framework {
  Graph graph;
  int dim = 2;
  std::vector<Coordinates> positions;  // one d-vector per vertex

  /// Integer placement, including deliberately degenerate ones.
  static Framework from_integers(Graph graph, int dim, const std::vector<std::vector<long>>& coords);

  mpq_class squared_distance(Vertex u, Vertex v) const;
};

/// Coordinates drawn uniformly from [-2^31, 2^31) with a seeded generator.
Framework realize_random(const Graph& g, int d, std::uint64_t seed);

/// |E| x d|V| matrix; the row of uv holds p(u)-p(v) in u's columns and
/// p(v)-p(u) in v's columns. Rows follow the canonical edge order.
struct RigidityMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpq_class> entries;  // row-major

  const mpq_class& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  mpq_class& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

RigidityMatrix rigidity_matrix(const Framework& f);

/// Exact rank by fraction-free (Bareiss) elimination over the integers after
/// clearing row denominators.
std::size_t exact_rank(const RigidityMatrix& m);

/// r_d(G) at a random integer realization; equals the generic rank unless the
/// draw is unlucky, in which case it can only be smaller.
std::size_t numeric_rank(const Graph& g, int d, std::uint64_t seed);

/// Every edge has the same squared length in both frameworks, up to `tol`.
/// Throws InvalidArgument when graphs or dimensions differ.
bool check_equivalent(const Framework& a, const Framework& b, const mpq_class& tol = 0);

/// Reflects the vertices of `side` across the line through p(a), p(b), where
/// {a,b} = `sep` separates `side` from the rest. Returns the reflected
/// framework when the squared u-v distance changes, nullopt otherwise.
/// Throws PreconditionViolation if sep is not a 2-separator, side is not a
/// proper union of components of G - sep, or u, v are not split by it.
std::optional<Framework> reflect_refute(const Framework& f, const Edge& sep, const VertexSet& side,
                                        Vertex u, Vertex v);

}  // namespace rigid

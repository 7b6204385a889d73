#include "rigid/numeric.hpp"

#include <algorithm>
#include <random>

namespace rigid {

Framework Framework::from_integers(Graph graph, int dim, const std::vector<std::vector<long>>& coords) {
  if (dim < 1) throw InvalidArgument("framework: dimension must be positive");
  if (coords.size() != static_cast<std::size_t>(graph.n()))
    throw InvalidArgument("framework: one coordinate vector per vertex required");
  Framework f;
  f.graph = std::move(graph);
  f.dim = dim;
  for (const auto& c : coords) {
    if (c.size() != static_cast<std::size_t>(dim)) throw InvalidArgument("framework: wrong coordinate count");
    Coordinates p;
    for (long x : c) p.emplace_back(x);
    f.positions.push_back(std::move(p));
  }
  return f;
}

mpq_class Framework::squared_distance(Vertex u, Vertex v) const {
  mpq_class total = 0;
  for (int k = 0; k < dim; ++k) {
    mpq_class diff = positions[u][k] - positions[v][k];
    total += diff * diff;
  }
  return total;
}

Framework realize_random(const Graph& g, int d, std::uint64_t seed) {
  if (d < 1) throw InvalidArgument("realize_random: dimension must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-(1L << 31), (1L << 31) - 1);
  Framework f;
  f.graph = g;
  f.dim = d;
  f.positions.resize(g.n());
  for (auto& p : f.positions)
    for (int k = 0; k < d; ++k) p.emplace_back(coord(rng));
  return f;
}

RigidityMatrix rigidity_matrix(const Framework& f) {
  RigidityMatrix m;
  m.rows = f.graph.m();
  m.cols = static_cast<std::size_t>(f.dim) * f.graph.n();
  m.entries.assign(m.rows * m.cols, 0);
  std::size_t r = 0;
  for (const Edge& e : f.graph.edges()) {
    for (int k = 0; k < f.dim; ++k) {
      mpq_class diff = f.positions[e.u][k] - f.positions[e.v][k];
      m.at(r, e.u * f.dim + k) = diff;
      m.at(r, e.v * f.dim + k) = -diff;
    }
    ++r;
  }
  return m;
}

std::size_t exact_rank(const RigidityMatrix& m) {
  // Clear denominators row by row; rank is unchanged by row scaling.
  std::vector<std::vector<mpz_class>> a(m.rows, std::vector<mpz_class>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < m.cols; ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols; ++c) {
      mpq_class scaled = m.at(r, c) * scale;
      a[r][c] = scaled.get_num();
    }
  }

  // Bareiss: every intermediate entry is a minor of the input, so the
  // division by the previous pivot is exact.
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        mpz_class value = a[rank][c] * a[r][j] - a[r][c] * a[rank][j];
        mpz_divexact(a[r][j].get_mpz_t(), value.get_mpz_t(), previous.get_mpz_t());
      }
      a[r][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

std::size_t numeric_rank(const Graph& g, int d, std::uint64_t seed) {
  return exact_rank(rigidity_matrix(realize_random(g, d, seed)));
}

bool check_equivalent(const Framework& a, const Framework& b, const mpq_class& tol) {
  if (!(a.graph == b.graph) || a.dim != b.dim)
    throw InvalidArgument("check_equivalent: frameworks must share graph and dimension");
  for (const Edge& e : a.graph.edges()) {
    mpq_class gap = a.squared_distance(e.u, e.v) - b.squared_distance(e.u, e.v);
    if (abs(gap) > tol) return false;
  }
  return true;
}

std::optional<Framework> reflect_refute(const Framework& f, const Edge& sep, const VertexSet& side,
                                        Vertex u, Vertex v) {
  const Graph& g = f.graph;
  if (f.dim != 2) throw PreconditionViolation("reflect_refute: framework must be planar");
  if (!is_separator(g, sep)) throw PreconditionViolation("reflect_refute: pair is not a 2-separator");
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw PreconditionViolation("reflect_refute: vertex out of range");

  std::vector<char> in_side(g.n(), 0);
  for (Vertex x : side) {
    if (!g.has_vertex(x) || sep.contains(x)) throw PreconditionViolation("reflect_refute: side meets the separator");
    in_side[x] = 1;
  }
  const Vertex removed[] = {sep.u, sep.v};
  auto [label, count] = components_without(g, removed);
  std::vector<int> in_count(count, 0), total(count, 0);
  for (Vertex x = 0; x < g.n(); ++x) {
    if (label[x] < 0) continue;
    ++total[label[x]];
    if (in_side[x]) ++in_count[label[x]];
  }
  int whole = 0;
  for (int c = 0; c < count; ++c) {
    if (in_count[c] != 0 && in_count[c] != total[c])
      throw PreconditionViolation("reflect_refute: side is not a union of components");
    if (in_count[c] == total[c] && total[c] > 0) ++whole;
  }
  if (whole == 0 || whole == count) throw PreconditionViolation("reflect_refute: side must be a proper union of components");
  const bool split = (in_side[u] && !in_side[v] && !sep.contains(v)) || (in_side[v] && !in_side[u] && !sep.contains(u));
  if (!split) throw PreconditionViolation("reflect_refute: side must separate u from v");

  const Coordinates& a = f.positions[sep.u];
  const Coordinates& b = f.positions[sep.v];
  const mpq_class dx = b[0] - a[0];
  const mpq_class dy = b[1] - a[1];
  const mpq_class norm = dx * dx + dy * dy;
  if (norm == 0) return std::nullopt;

  Framework out = f;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (!in_side[x]) continue;
    // p' = a + 2 proj_{b-a}(p - a) - (p - a)
    const mpq_class px = f.positions[x][0] - a[0];
    const mpq_class py = f.positions[x][1] - a[1];
    const mpq_class t = (px * dx + py * dy) / norm;
    out.positions[x][0] = a[0] + 2 * t * dx - px;
    out.positions[x][1] = a[1] + 2 * t * dy - py;
  }
  if (out.squared_distance(u, v) == f.squared_distance(u, v)) return std::nullopt;
  return out;
}

}  // namespace rigid

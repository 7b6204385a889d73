#include "rigid/rigidity2d.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rigid {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PebbleGame::PebbleGame(int n) : pebbles_(n, 2), out_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
}

PebbleGame::PebbleGame(const Graph& g) : PebbleGame(g.n()) {
  for (const Edge& e : g.edges()) try_insert(e);
}

// Depth-first search along out-edges from `target` for a free pebble, never
// entering `blocked`. On success the path is reversed and the pebble moves to
// `target`.
bool PebbleGame::gather(Vertex target, Vertex blocked) {
  std::vector<Vertex> parent(pebbles_.size(), -1);
  std::vector<char> seen(pebbles_.size(), 0);
  seen[target] = 1;
  seen[blocked] = 1;
  std::vector<Vertex> stack{target};
  Vertex found = -1;
  while (!stack.empty() && found < 0) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : out_[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = x;
      if (pebbles_[y] > 0) {
        found = y;
        break;
      }
      stack.push_back(y);
    }
  }
  if (found < 0) return false;
  pebbles_[found] -= 1;
  pebbles_[target] += 1;
  for (Vertex y = found; y != target; y = parent[y]) {
    Vertex x = parent[y];
    auto& list = out_[x];
    list.erase(std::find(list.begin(), list.end(), y));
    out_[y].push_back(x);
  }
  return true;
}

bool PebbleGame::try_insert(const Edge& e) {
  if (e.u == e.v || e.u < 0 || e.v >= n()) throw InvalidArgument("pebble game: invalid edge");
  while (pebbles_[e.u] < 2 && gather(e.u, e.v)) {
  }
  while (pebbles_[e.v] < 2 && gather(e.v, e.u)) {
  }
  if (pebbles_[e.u] + pebbles_[e.v] < 4) {
    rejected_.push_back(e);
    return false;
  }
  pebbles_[e.u] -= 1;
  out_[e.u].push_back(e.v);
  accepted_.push_back(e);
  return true;
}

bool PebbleGame::would_accept(const Edge& e) const {
  PebbleGame copy = *this;
  return copy.try_insert(e);
}

bool PebbleGame::invariants_hold() const {
  std::size_t oriented = 0;
  std::vector<Edge> seen;
  for (Vertex v = 0; v < n(); ++v) {
    if (pebbles_[v] < 0 || pebbles_[v] + out_degree(v) != 2) return false;
    oriented += out_[v].size();
    for (Vertex w : out_[v]) seen.emplace_back(v, w);
  }
  std::vector<Edge> expected = accepted_;
  std::sort(expected.begin(), expected.end());
  std::sort(seen.begin(), seen.end());
  return oriented == accepted_.size() && seen == expected;
}

int r2_rank(int n, std::span<const Edge> edges) {
  PebbleGame game(n);
  for (const Edge& e : edges) game.try_insert(e);
  return static_cast<int>(game.accepted().size());
}

int r2_rank(const Graph& g) { return r2_rank(g.n(), g.edges()); }

bool is_r2_independent(const Graph& g) { return static_cast<std::size_t>(r2_rank(g)) == g.m(); }

bool is_rigid_2d(const Graph& g) {
  if (g.n() <= 1) return true;
  return r2_rank(g) == 2 * g.n() - 3;
}

bool is_redundantly_rigid_2d(const Graph& g) {
  return is_rigid_2d(g) && r2_components(g).bridges().empty();
}

std::vector<Edge> fundamental_circuit(const PebbleGame& state, const Edge& e) {
  if (state.would_accept(e))
    throw InvalidArgument("fundamental_circuit: edge is independent of the accepted set");
  // f lies on the circuit iff swapping f for e keeps the set independent.
  const auto& basis = state.accepted();
  std::vector<Edge> circuit{e};
  std::vector<Edge> rest;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) rest.push_back(basis[j]);
    PebbleGame trial(state.n());
    for (const Edge& f : rest) trial.try_insert(f);
    if (trial.try_insert(e)) circuit.push_back(basis[i]);
  }
  std::sort(circuit.begin(), circuit.end());
  return circuit;
}

std::vector<Edge> R2Decomposition::bridges() const {
  std::vector<Edge> out;
  for (const auto& c : components)
    if (c.trivial) out.push_back(c.edges.front());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t R2Decomposition::non_trivial_count() const {
  return static_cast<std::size_t>(std::count_if(components.begin(), components.end(),
                                                [](const R2Component& c) { return !c.trivial; }));
}

R2Decomposition r2_components(const Graph& g) {
  // Transitive closure of "shares a fundamental circuit" over one basis.
  PebbleGame basis(g);
  DisjointSets sets(g.m());
  for (const Edge& e : basis.rejected()) {
    const auto idx = static_cast<std::size_t>(g.edge_index(e));
    for (const Edge& f : fundamental_circuit(basis, e))
      sets.unite(idx, static_cast<std::size_t>(g.edge_index(f)));
  }

  R2Decomposition out;
  out.component_of_edge.assign(g.m(), -1);
  std::vector<int> slot(g.m(), -1);
  for (std::size_t i = 0; i < g.m(); ++i) {
    std::size_t root = sets.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.components.size());
      out.components.emplace_back();
    }
    out.component_of_edge[i] = slot[root];
    auto& comp = out.components[static_cast<std::size_t>(slot[root])];
    comp.edges.push_back(g.edges()[i]);
    comp.vertices.push_back(g.edges()[i].u);
    comp.vertices.push_back(g.edges()[i].v);
  }
  for (auto& comp : out.components) {
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.vertices.erase(std::unique(comp.vertices.begin(), comp.vertices.end()), comp.vertices.end());
    comp.trivial = comp.edges.size() == 1;
  }
  return out;
}

std::vector<Edge> r2_bridges(const Graph& g) { return r2_components(g).bridges(); }

bool is_r2_connected(const Graph& g) {
  return g.m() >= 1 && r2_components(g).components.size() == 1;
}

VertexSet attachment_vertices(const Graph& g, const VertexSet& part) {
  std::vector<char> inside(g.n(), 0);
  for (Vertex v : part) inside[v] = 1;
  VertexSet out;
  for (Vertex v : part) {
    const auto& nb = g.neighbors(v);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return !inside[w]; })) out.push_back(v);
  }
  return out;
}

}  // namespace rigid

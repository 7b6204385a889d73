#include "rigid/bodybar.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

namespace rigid {

namespace {

constexpr int kUnassigned = -1;

// Edge ids on the path between a and b in forest number `forest` of the assignment `which`,
// or nullopt when a and b lie in different trees.
std::optional<std::vector<std::size_t>> forest_path(const Multigraph& h, const std::vector<int>& which,
                                                    int forest, Vertex a, Vertex b) {
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(h.n());
  for (std::size_t id = 0; id < h.m(); ++id) {
    if (which[id] != forest) continue;
    const Edge& e = h.edge(id);
    adj[e.u].emplace_back(e.v, id);
    adj[e.v].emplace_back(e.u, id);
  }
  std::vector<long> via(h.n(), -1);
  std::vector<char> seen(h.n(), 0);
  std::queue<Vertex> queue;
  queue.push(a);
  seen[a] = 1;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    if (x == b) break;
    for (auto [y, id] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = static_cast<long>(id);
      queue.push(y);
    }
  }
  if (!seen[b]) return std::nullopt;
  std::vector<std::size_t> path;
  for (Vertex x = b; x != a;) {
    auto id = static_cast<std::size_t>(via[x]);
    path.push_back(id);
    x = h.edge(id).other(x);
  }
  return path;
}

void require_bodybar_sizes(const Multigraph& h, int d) {
  if (d < 1) throw PreconditionViolation("body-bar: dimension must be at least 1");
  if (h.n() < 2 || h.m() < 2) throw PreconditionViolation("body-bar: need |V| >= 2 and |E| >= 2");
}

}  // namespace

std::size_t UnionMatroidState::rank() const {
  std::size_t total = 0;
  for (const auto& f : forests) total += f.size();
  return total;
}

UnionMatroidState union_forests(const Multigraph& h, int k) {
  if (k < 1) throw InvalidArgument("matroid union: k must be positive");
  std::vector<int> which(h.m(), kUnassigned);

  for (std::size_t start = 0; start < h.m(); ++start) {
    // Breadth-first search in the exchange graph: inserting x into forest i
    // either succeeds or displaces one edge of the cycle it closes there.
    std::vector<std::pair<long, int>> parent(h.m(), {-1, kUnassigned});
    std::vector<char> seen(h.m(), 0);
    std::queue<std::size_t> queue;
    queue.push(start);
    seen[start] = 1;
    bool augmented = false;
    while (!queue.empty() && !augmented) {
      std::size_t x = queue.front();
      queue.pop();
      const Edge& ex = h.edge(x);
      for (int i = 0; i < k && !augmented; ++i) {
        if (which[x] == i) continue;
        auto cycle = forest_path(h, which, i, ex.u, ex.v);
        if (!cycle) {
          std::size_t cur = x;
          int target = i;
          while (true) {
            int previous = which[cur];
            which[cur] = target;
            if (cur == start) break;
            target = previous;
            cur = static_cast<std::size_t>(parent[cur].first);
          }
          augmented = true;
          break;
        }
        for (std::size_t y : *cycle) {
          if (seen[y]) continue;
          seen[y] = 1;
          parent[y] = {static_cast<long>(x), i};
          queue.push(y);
        }
      }
    }
  }

  UnionMatroidState state;
  state.k = k;
  state.forests.resize(static_cast<std::size_t>(k));
  for (std::size_t id = 0; id < h.m(); ++id)
    if (which[id] != kUnassigned) state.forests[static_cast<std::size_t>(which[id])].push_back(id);
  return state;
}

std::size_t matroid_union_rank(const Multigraph& h, int k) { return union_forests(h, k).rank(); }

std::vector<std::size_t> mk_bridges(const Multigraph& h, int k) {
  const std::size_t full = matroid_union_rank(h, k);
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < h.m(); ++id)
    if (matroid_union_rank(h.without_edge(id), k) < full) out.push_back(id);
  return out;
}

SuperbrickPartition superbricks(const Multigraph& h, int k) {
  SuperbrickPartition out;
  out.bridges = mk_bridges(h, k);
  std::vector<char> is_bridge(h.m(), 0);
  for (std::size_t id : out.bridges) is_bridge[id] = 1;

  std::vector<Vertex> root(h.n());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](Vertex x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t id = 0; id < h.m(); ++id) {
    if (is_bridge[id]) continue;
    Vertex a = find(h.edge(id).u), b = find(h.edge(id).v);
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> slot(h.n(), -1);
  for (Vertex v = 0; v < h.n(); ++v) {
    Vertex r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.parts.parts.size());
      out.parts.parts.emplace_back();
    }
    out.parts.parts[static_cast<std::size_t>(slot[r])].push_back(v);
  }
  return out;
}

bool is_k_tree_connected(const Multigraph& h, int k) {
  if (k < 1) throw InvalidArgument("tree connectivity: k must be positive");
  if (h.n() <= 1) return true;
  return matroid_union_rank(h, k) == static_cast<std::size_t>(k) * static_cast<std::size_t>(h.n() - 1);
}

bool is_highly_k_tree_connected(const Multigraph& h, int k) {
  if (k < 1) throw InvalidArgument("tree connectivity: k must be positive");
  if (h.n() <= 1) return true;
  if (h.m() == 0) return false;
  for (std::size_t id = 0; id < h.m(); ++id)
    if (!is_k_tree_connected(h.without_edge(id), k)) return false;
  return true;
}

VertexSet BodyBarGraph::body(Vertex w) const {
  VertexSet out;
  for (Vertex x = body_start[w]; x < graph.n() && body_of[x].first == w; ++x) out.push_back(x);
  return out;
}

BodyBarGraph body_bar_construct(const Multigraph& h) {
  BodyBarGraph out;
  out.body_start.resize(h.n());
  std::vector<std::vector<std::size_t>> incident(h.n());
  for (std::size_t id = 0; id < h.m(); ++id) {
    incident[h.edge(id).u].push_back(id);
    incident[h.edge(id).v].push_back(id);
  }
  Vertex next = 0;
  for (Vertex w = 0; w < h.n(); ++w) {
    out.body_start[w] = next;
    for (std::size_t slot = 0; slot < incident[w].size(); ++slot)
      out.body_of.emplace_back(w, static_cast<int>(slot));
    next += static_cast<Vertex>(incident[w].size());
  }
  auto slot_vertex = [&](Vertex w, std::size_t id) {
    auto it = std::find(incident[w].begin(), incident[w].end(), id);
    return out.body_start[w] + static_cast<Vertex>(it - incident[w].begin());
  };

  std::vector<Edge> edges;
  for (Vertex w = 0; w < h.n(); ++w) {
    const Vertex first = out.body_start[w];
    const auto size = static_cast<Vertex>(incident[w].size());
    for (Vertex a = 0; a < size; ++a)
      for (Vertex b = a + 1; b < size; ++b) edges.emplace_back(first + a, first + b);
  }
  for (std::size_t id = 0; id < h.m(); ++id) {
    const Edge& e = h.edge(id);
    out.bars.emplace_back(slot_vertex(e.u, id), slot_vertex(e.v, id));
    edges.push_back(out.bars.back());
  }
  out.graph = Graph(next, edges);
  return out;
}

int bodybar_trees(int d) { return d * (d + 1) / 2; }

bool is_rigid_bodybar(const Multigraph& h, int d) {
  require_bodybar_sizes(h, d);
  return is_k_tree_connected(h, bodybar_trees(d));
}

bool is_globally_rigid_bodybar(const Multigraph& h, int d) {
  require_bodybar_sizes(h, d);
  return is_highly_k_tree_connected(h, bodybar_trees(d));
}

BodyBarLinkedPairs::BodyBarLinkedPairs(const Multigraph& h, int d)
    : body_bar_(body_bar_construct(h)), bricks_(superbricks(h, bodybar_trees(d))) {
  if (d < 1) throw PreconditionViolation("body-bar: dimension must be at least 1");
  part_of_ = bricks_.parts.part_of(h.n());
}

bool BodyBarLinkedPairs::linked(Vertex u, Vertex v) const {
  const Graph& g = body_bar_.graph;
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw InvalidArgument("body-bar linked: vertex " + std::to_string(g.has_vertex(u) ? v : u) +
                          " is not a body-bar vertex");
  if (u == v) throw InvalidArgument("body-bar linked: u and v must differ");
  if (g.has_edge(u, v)) return true;
  return part_of_[body_bar_.host(u)] == part_of_[body_bar_.host(v)];
}

bool is_globally_linked_bodybar(const Multigraph& h, int d, Vertex u, Vertex v) {
  return BodyBarLinkedPairs(h, d).linked(u, v);
}

}  // namespace rigid

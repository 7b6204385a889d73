#include "rigid/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

namespace rigid {

namespace {

bool contains(const VertexSet& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

std::size_t overlap(const VertexSet& a, const VertexSet& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

struct Piece {
  VertexSet vertices;
  std::vector<Edge> edges;  // host labels
};

// Splits `piece` along its first 2-separator side in canonical order, or
// returns nullopt when the piece is 3-connected.
std::optional<std::pair<Piece, Piece>> cleave(const Piece& piece) {
  const Relabelled local =
      induced_subgraph(Graph(piece.vertices.back() + 1, piece.edges), piece.vertices);
  const Graph& g = local.graph;
  if (g.n() < 4) return std::nullopt;
  if (!is_k_connected(g, 2))
    throw OracleDisagreement("three_blocks: a cleaved piece lost 2-connectivity");

  // Smallest side over all separators; ties broken by the side's vertex list.
  std::optional<VertexSet> best_side;
  Edge best_pair;
  for (const Edge& pair : two_separators(g)) {
    const Vertex removed[] = {pair.u, pair.v};
    auto [label, count] = components_without(g, removed);
    for (int c = 0; c < count; ++c) {
      VertexSet side;
      for (Vertex x = 0; x < g.n(); ++x)
        if (label[x] == c) side.push_back(x);
      if (!best_side || side.size() < best_side->size() ||
          (side.size() == best_side->size() && side < *best_side)) {
        best_side = side;
        best_pair = pair;
      }
    }
  }
  if (!best_side) return std::nullopt;

  std::vector<char> in_side(g.n(), 0);
  for (Vertex x : *best_side) in_side[x] = 1;
  const Edge host_pair(local.to_host[best_pair.u], local.to_host[best_pair.v]);

  Piece first;
  Piece second;
  for (Vertex x = 0; x < g.n(); ++x) {
    if (in_side[x] || best_pair.contains(x)) first.vertices.push_back(local.to_host[x]);
    if (!in_side[x]) second.vertices.push_back(local.to_host[x]);
  }
  for (const Edge& e : g.edges()) {
    const Edge host(local.to_host[e.u], local.to_host[e.v]);
    if (host == host_pair) continue;
    if (in_side[e.u] || in_side[e.v])
      first.edges.push_back(host);
    else
      second.edges.push_back(host);
  }
  first.edges.push_back(host_pair);
  second.edges.push_back(host_pair);
  return std::make_pair(std::move(first), std::move(second));
}

}  // namespace

std::vector<VertexSet> ThreeBlockTree::vertex_sets() const {
  std::vector<VertexSet> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.vertices);
  return out;
}

ThreeBlockTree three_blocks(const Graph& h) {
  if (h.n() < 4) throw PreconditionViolation("three_blocks: fewer than four vertices");
  for (Vertex v = 0; v < h.n(); ++v)
    if (h.degree(v) == 0) throw PreconditionViolation("three_blocks: isolated vertex");
  if (!is_r2_connected(h)) throw PreconditionViolation("three_blocks: graph is not R2-connected");

  const std::vector<Edge> separators = two_separators(h);
  Piece root;
  for (Vertex v = 0; v < h.n(); ++v) root.vertices.push_back(v);
  root.edges = h.edges();
  for (const Edge& s : separators)
    if (!h.has_edge(s)) root.edges.push_back(s);

  ThreeBlockTree tree;
  std::vector<Piece> work{std::move(root)};
  while (!work.empty()) {
    Piece piece = std::move(work.back());
    work.pop_back();
    if (auto halves = cleave(piece)) {
      work.push_back(std::move(halves->second));
      work.push_back(std::move(halves->first));
      continue;
    }
    Block block;
    block.vertices = piece.vertices;
    block.edges = piece.edges;
    std::sort(block.edges.begin(), block.edges.end());
    for (const Edge& e : block.edges)
      if (!h.has_edge(e)) block.virtual_edges.push_back(e);
    tree.blocks.push_back(std::move(block));
  }
  std::sort(tree.blocks.begin(), tree.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

  for (const Edge& s : separators) {
    int count = 0;
    for (const auto& b : tree.blocks)
      if (contains(b.vertices, s.u) && contains(b.vertices, s.v)) ++count;
    tree.separators.push_back({s, count});
    tree.k += count - 1;
  }
  return tree;
}

bool is_m_shellable(std::span<const VertexSet> sets, std::span<const std::size_t> order, int m) {
  std::set<Vertex> seen;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const VertexSet& x = sets[order[j]];
    if (j > 0) {
      auto common = std::count_if(x.begin(), x.end(), [&](Vertex v) { return seen.count(v) > 0; });
      if (common > m) return false;
    }
    seen.insert(x.begin(), x.end());
  }
  return true;
}

std::optional<std::vector<std::size_t>> shellable_ordering(std::span<const VertexSet> sets, int m,
                                                           std::optional<std::size_t> first) {
  const std::size_t p = sets.size();
  if (p == 0) return std::vector<std::size_t>{};
  if (p > 63) throw InvalidArgument("shellable_ordering: at most 63 sets supported");
  if (first && *first >= p) throw InvalidArgument("shellable_ordering: first set out of range");

  Vertex max_v = 0;
  for (const auto& s : sets)
    for (Vertex v : s) max_v = std::max(max_v, v);

  // The union of the placed sets depends only on which sets are placed, so a
  // placed-subset that failed once fails always.
  std::unordered_set<std::uint64_t> dead;
  std::vector<std::size_t> order;
  std::vector<int> cover(static_cast<std::size_t>(max_v) + 1, 0);
  const std::uint64_t full = (p == 64) ? ~0ULL : ((1ULL << p) - 1);

  auto place = [&](std::size_t i, int delta) {
    for (Vertex v : sets[i]) cover[v] += delta;
  };
  auto fits = [&](std::size_t i) {
    int common = 0;
    for (Vertex v : sets[i])
      if (cover[v] > 0) ++common;
    return common <= m;
  };

  auto search = [&](auto&& self, std::uint64_t used) -> bool {
    if (used == full) return true;
    if (dead.count(used)) return false;
    for (std::size_t i = 0; i < p; ++i) {
      if (used & (1ULL << i)) continue;
      if (!fits(i)) continue;
      place(i, 1);
      order.push_back(i);
      if (self(self, used | (1ULL << i))) return true;
      order.pop_back();
      place(i, -1);
    }
    dead.insert(used);
    return false;
  };

  if (first) {
    place(*first, 1);
    order.push_back(*first);
    if (search(search, 1ULL << *first)) return order;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < p; ++i) {
    place(i, 1);
    order.push_back(i);
    if (search(search, 1ULL << i)) return order;
    order.pop_back();
    place(i, -1);
  }
  return std::nullopt;
}

std::vector<std::size_t> block_shelling(const ThreeBlockTree& tree, const Edge& designated) {
  const auto sets = tree.vertex_sets();
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < sets.size() && !start; ++i)
    if (contains(sets[i], designated.u) && contains(sets[i], designated.v)) start = i;
  if (!start) throw InvalidArgument("block_shelling: no block induces the designated edge");

  // Breadth-first over blocks sharing a separator pair.
  std::vector<std::size_t> order;
  std::vector<char> placed(sets.size(), 0);
  std::queue<std::size_t> queue;
  queue.push(*start);
  placed[*start] = 1;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop();
    order.push_back(i);
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (!placed[j] && overlap(sets[i], sets[j]) >= 2) {
        placed[j] = 1;
        queue.push(j);
      }
    }
  }
  if (order.size() == sets.size() && is_m_shellable(sets, order, 2)) return order;

  auto exact = shellable_ordering(sets, 2, *start);
  if (!exact) throw OracleDisagreement("block_shelling: blocks admit no 2-shellable ordering");
  return *exact;
}

LinkedPairs::LinkedPairs(const Graph& g)
    : graph_(g), decomposition_(r2_components(g)), components_at_(g.n()) {
  subgraphs_.reserve(decomposition_.components.size());
  for (std::size_t i = 0; i < decomposition_.components.size(); ++i) {
    const auto& comp = decomposition_.components[i];
    if (comp.trivial) {
      subgraphs_.push_back(Relabelled{});
      continue;
    }
    subgraphs_.push_back(edge_subgraph(g.n(), comp.edges));
    for (Vertex v : comp.vertices) components_at_[v].push_back(static_cast<int>(i));
  }
}

std::optional<LinkWitness> LinkedPairs::witness(Vertex u, Vertex v) const {
  if (!graph_.has_vertex(u) || !graph_.has_vertex(v)) throw InvalidArgument("linked: vertex out of range");
  if (u == v) throw InvalidArgument("linked: u and v must differ");
  if (graph_.has_edge(u, v)) return LinkWitness{true, -1};
  for (int c : components_at_[u]) {
    const auto& vs = decomposition_.components[c].vertices;
    if (!contains(vs, v)) continue;
    const Relabelled& sub = subgraphs_[c];
    if (kappa(sub.graph, sub.local(u), sub.local(v)) >= 3) return LinkWitness{false, c};
  }
  return std::nullopt;
}

bool is_globally_linked_2d(const Graph& g, Vertex u, Vertex v) { return LinkedPairs(g).linked(u, v); }

bool is_globally_linked_1d(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw InvalidArgument("linked: vertex out of range");
  if (u == v) throw InvalidArgument("linked: u and v must differ");
  return g.has_edge(u, v) || kappa(g, u, v) >= 2;
}

std::vector<Edge> linked_closure_additions(const Graph& g) {
  LinkedPairs oracle(g);
  std::vector<Edge> out;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v) && oracle.linked(u, v)) out.emplace_back(u, v);
  return out;
}

Graph globally_linked_closure(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : linked_closure_additions(g)) edges.push_back(e);
  return Graph(g.n(), edges);
}

ClusterCover globally_linked_clusters(const Graph& g) {
  const R2Decomposition dec = r2_components(g);

  struct ComponentBlocks {
    int component;
    std::vector<Edge> host_edges;
    ThreeBlockTree tree;  // host labels
  };
  std::vector<ComponentBlocks> parts;
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    const auto& comp = dec.components[i];
    if (comp.trivial) continue;
    Relabelled sub = edge_subgraph(g.n(), comp.edges);
    ThreeBlockTree tree = three_blocks(sub.graph);
    auto lift = [&](Edge e) { return Edge(sub.to_host[e.u], sub.to_host[e.v]); };
    for (auto& b : tree.blocks) {
      for (Vertex& v : b.vertices) v = sub.to_host[v];
      for (Edge& e : b.edges) e = lift(e);
      for (Edge& e : b.virtual_edges) e = lift(e);
      std::sort(b.vertices.begin(), b.vertices.end());
    }
    for (auto& s : tree.separators) s.pair = lift(s.pair);
    parts.push_back({static_cast<int>(i), comp.edges, std::move(tree)});
  }

  ClusterCover cover;
  std::vector<std::size_t> first_cluster;  // per part, index of its first block in `clusters`
  for (const auto& part : parts) {
    first_cluster.push_back(cover.clusters.size());
    for (const auto& b : part.tree.blocks) {
      cover.clusters.push_back(b.vertices);
      cover.cluster_component.push_back(part.component);
    }
  }

  for (const Edge& e : g.edges()) {
    bool induced = std::any_of(cover.clusters.begin(), cover.clusters.end(), [&](const VertexSet& c) {
      return contains(c, e.u) && contains(c, e.v);
    });
    if (!induced) cover.uncovered.push_back(e);
  }
  if (cover.uncovered != dec.bridges())
    throw OracleDisagreement("clusters: uncovered edges differ from the R2-bridges");

  std::map<Edge, int> count;
  for (const auto& c : cover.clusters)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) ++count[Edge(c[i], c[j])];
  for (const auto& [pair, h] : count)
    if (h >= 2) cover.multiplicities.push_back({pair, h});

  cover.rank = r2_rank(g);
  cover.identity_rhs = static_cast<int>(cover.uncovered.size());
  for (const auto& c : cover.clusters) cover.identity_rhs += 2 * static_cast<int>(c.size()) - 3;
  for (const auto& m : cover.multiplicities) cover.identity_rhs -= m.blocks - 1;

  // Peel components with at most two attachment vertices (relative to the
  // remaining components), then lay them out in reverse peeling order.
  std::vector<std::size_t> remaining(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) remaining[i] = i;
  std::vector<std::pair<std::size_t, VertexSet>> peeled;
  while (remaining.size() > 1) {
    bool found = false;
    for (std::size_t r = 0; r < remaining.size() && !found; ++r) {
      const auto& vs = dec.components[parts[remaining[r]].component].vertices;
      VertexSet attach;
      for (Vertex v : vs) {
        for (std::size_t o = 0; o < remaining.size(); ++o) {
          if (o != r && contains(dec.components[parts[remaining[o]].component].vertices, v)) {
            attach.push_back(v);
            break;
          }
        }
      }
      if (attach.size() <= 2) {
        peeled.emplace_back(remaining[r], std::move(attach));
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(r));
        found = true;
      }
    }
    if (!found) throw OracleDisagreement("clusters: no component with at most two attachment vertices");
  }
  if (!remaining.empty()) peeled.emplace_back(remaining.front(), VertexSet{});

  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const auto& part = parts[it->first];
    Edge designated = part.host_edges.front();
    if (!it->second.empty()) {
      const Vertex x = it->second.front();
      designated = *std::find_if(part.host_edges.begin(), part.host_edges.end(),
                                 [x](const Edge& e) { return e.contains(x); });
    }
    for (std::size_t b : block_shelling(part.tree, designated))
      cover.ordering.push_back(first_cluster[it->first] + b);
  }
  if (!is_m_shellable(cover.clusters, cover.ordering, 3))
    throw OracleDisagreement("clusters: constructed ordering is not 3-shellable");
  return cover;
}

GlobalRigidityReport global_rigidity_2d(const Graph& g) {
  GlobalRigidityReport report;
  if (g.n() <= 3) {
    report.globally_rigid = g.is_complete();
    report.three_connected = g.is_complete();
    report.r2_connected = g.m() >= 1 && is_r2_connected(g);
    return report;
  }
  report.three_connected = is_k_connected(g, 3);
  report.r2_connected = is_r2_connected(g);
  report.globally_rigid = report.three_connected && report.r2_connected;
  return report;
}

bool is_globally_rigid_2d(const Graph& g) { return global_rigidity_2d(g).globally_rigid; }

bool uniquely_localizable(const Graph& g, std::span<const Vertex> anchors, Vertex target) {
  if (!g.has_vertex(target)) throw InvalidArgument("localizable: target out of range");
  VertexSet pinned(anchors.begin(), anchors.end());
  std::sort(pinned.begin(), pinned.end());
  pinned.erase(std::unique(pinned.begin(), pinned.end()), pinned.end());
  for (Vertex b : pinned)
    if (!g.has_vertex(b)) throw InvalidArgument("localizable: anchor out of range");
  if (contains(pinned, target)) throw InvalidArgument("localizable: target is an anchor");
  if (pinned.size() < 3) return false;

  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < pinned.size(); ++i)
    for (std::size_t j = i + 1; j < pinned.size(); ++j)
      if (!g.has_edge(pinned[i], pinned[j])) edges.emplace_back(pinned[i], pinned[j]);
  const Graph completed(g.n(), edges);

  for (const auto& comp : r2_components(completed).components) {
    if (comp.trivial || !contains(comp.vertices, target)) continue;
    if (!std::all_of(pinned.begin(), pinned.end(), [&](Vertex b) { return contains(comp.vertices, b); }))
      continue;
    const Relabelled sub = edge_subgraph(g.n(), comp.edges);
    return std::all_of(pinned.begin(), pinned.end(), [&](Vertex b) {
      return kappa(sub.graph, sub.local(target), sub.local(b)) >= 3;
    });
  }
  return false;
}

}  // namespace rigid

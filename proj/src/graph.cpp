#include "rigid/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace rigid {

namespace {

void check_pair(int n, Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw InvalidArgument("edge endpoint out of range: " + std::to_string(a) + " " +
                          std::to_string(b));
  if (a == b) throw InvalidArgument("loop at vertex " + std::to_string(a));
}

// Unit-capacity residual network used for vertex connectivity.
class UnitNetwork {
 public:
  explicit UnitNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[static_cast<std::size_t>(from)]});
    head_[static_cast<std::size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[static_cast<std::size_t>(to)]});
    head_[static_cast<std::size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int s, int t) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(s);
      via[static_cast<std::size_t>(s)] = -2;
      while (!queue.empty() && via[static_cast<std::size_t>(t)] == -1) {
        int x = queue.front();
        queue.pop();
        for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
          const Arc& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
            via[static_cast<std::size_t>(arc.to)] = a;
            queue.push(arc.to);
          }
        }
      }
      if (via[static_cast<std::size_t>(t)] == -1) return flow;
      for (int x = t; x != s;) {
        int a = via[static_cast<std::size_t>(x)];
        arcs_[static_cast<std::size_t>(a)].cap -= 1;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
        x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
      }
      ++flow;
    }
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  validate_and_insert({edges.begin(), edges.end()});
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) {
    check_pair(n, a, b);
    list.emplace_back(a, b);
  }
  validate_and_insert(std::move(list));
}

void Graph::validate_and_insert(std::vector<Edge> edges) {
  for (const Edge& e : edges) check_pair(n_, e.u, e.v);
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidArgument("parallel edges in a simple graph");
  edges_ = std::move(edges);
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_complete() const {
  return edges_.size() == static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ > 0 ? n_ - 1 : 0) / 2;
}

long Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<long>(it - edges_.begin());
}

Graph Graph::with_edge(const Edge& e) const {
  std::vector<Edge> list = edges_;
  list.push_back(e);
  return Graph(n_, list);
}

Graph Graph::without_edge(const Edge& e) const {
  std::vector<Edge> list;
  list.reserve(edges_.size());
  for (const Edge& f : edges_)
    if (f != e) list.push_back(f);
  return Graph(n_, list);
}

Relabelled induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Relabelled out;
  out.to_local.assign(static_cast<std::size_t>(g.n()), -1);
  out.to_host.assign(vertices.begin(), vertices.end());
  std::sort(out.to_host.begin(), out.to_host.end());
  for (std::size_t i = 0; i < out.to_host.size(); ++i)
    out.to_local[static_cast<std::size_t>(out.to_host[i])] = static_cast<Vertex>(i);
  std::vector<Edge> local;
  for (const Edge& e : g.edges()) {
    Vertex a = out.local(e.u), b = out.local(e.v);
    if (a >= 0 && b >= 0) local.emplace_back(a, b);
  }
  out.graph = Graph(static_cast<int>(out.to_host.size()), local);
  return out;
}

Relabelled edge_subgraph(int host_n, std::span<const Edge> edges) {
  Relabelled out;
  out.to_local.assign(static_cast<std::size_t>(host_n), -1);
  for (const Edge& e : edges) {
    out.to_host.push_back(e.u);
    out.to_host.push_back(e.v);
  }
  std::sort(out.to_host.begin(), out.to_host.end());
  out.to_host.erase(std::unique(out.to_host.begin(), out.to_host.end()), out.to_host.end());
  for (std::size_t i = 0; i < out.to_host.size(); ++i)
    out.to_local[static_cast<std::size_t>(out.to_host[i])] = static_cast<Vertex>(i);
  std::vector<Edge> local;
  local.reserve(edges.size());
  for (const Edge& e : edges) local.emplace_back(out.local(e.u), out.local(e.v));
  out.graph = Graph(static_cast<int>(out.to_host.size()), local);
  return out;
}

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  for (const Edge& e : edges_) check_pair(n_, e.u, e.v);
}

Multigraph::Multigraph(int n, std::initializer_list<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  for (auto [a, b] : edges) {
    check_pair(n, a, b);
    edges_.emplace_back(a, b);
  }
}

int Multigraph::degree(Vertex w) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [w](const Edge& e) { return e.contains(w); }));
}

std::vector<std::size_t> Multigraph::incident(Vertex w) const {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].contains(w)) ids.push_back(i);
  return ids;
}

Multigraph Multigraph::without_edge(std::size_t id) const {
  std::vector<Edge> rest;
  rest.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (i != id) rest.push_back(edges_[i]);
  return Multigraph(n_, std::move(rest));
}

std::vector<int> VertexPartition::part_of(int n) const {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Vertex v : parts[i]) owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
  return owner;
}

bool VertexPartition::is_valid(int n) const {
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& part : parts) {
    if (part.empty()) return false;
    for (Vertex v : part) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

std::pair<std::vector<int>, int> components_without(const Graph& g,
                                                   std::span<const Vertex> removed) {
  std::vector<int> label(static_cast<std::size_t>(g.n()), -2);
  for (Vertex r : removed) label[static_cast<std::size_t>(r)] = -1;
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (label[static_cast<std::size_t>(s)] != -2) continue;
    label[static_cast<std::size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (label[static_cast<std::size_t>(y)] == -2) {
          label[static_cast<std::size_t>(y)] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return {std::move(label), count};
}

bool is_connected(const Graph& g) { return components_without(g).second <= 1; }

int kappa(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw InvalidArgument("kappa: vertex out of range");
  if (u == v) throw InvalidArgument("kappa: u and v must differ");
  // Vertex splitting: x_in = 2x, x_out = 2x+1. Terminals are not capacity-limited.
  const int n = g.n();
  UnitNetwork net(2 * n);
  for (Vertex x = 0; x < n; ++x) net.add_arc(2 * x, 2 * x + 1, (x == u || x == v) ? n : 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(2 * e.u + 1, 2 * e.v, 1);
    net.add_arc(2 * e.v + 1, 2 * e.u, 1);
  }
  return net.max_flow(2 * u + 1, 2 * v);
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw InvalidArgument("is_k_connected: k must be positive");
  if (g.n() < k + 1) return false;
  // Whitney: k-connected iff every pair is joined by k internally disjoint paths.
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (kappa(g, u, v) < k) return false;
  return true;
}

bool is_separator(const Graph& g, const Edge& pair) {
  if (!g.has_vertex(pair.u) || !g.has_vertex(pair.v) || pair.u == pair.v) return false;
  const Vertex removed[] = {pair.u, pair.v};
  return components_without(g, removed).second >= 2;
}

std::vector<Edge> two_separators(const Graph& g) {
  if (!is_k_connected(g, 2)) throw PreconditionViolation("two_separators: graph is not 2-connected");
  std::vector<Edge> out;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      if (is_separator(g, Edge(a, b))) out.emplace_back(a, b);
  return out;
}

bool crossing(const Graph& g, const Edge& s1, const Edge& s2) {
  if (!is_separator(g, s1) || !is_separator(g, s2))
    throw PreconditionViolation("crossing: both pairs must be 2-separators");
  if (s2.contains(s1.u) || s2.contains(s1.v)) return false;
  const Vertex removed[] = {s2.u, s2.v};
  auto [label, count] = components_without(g, removed);
  return label[static_cast<std::size_t>(s1.u)] != label[static_cast<std::size_t>(s1.v)];
}

}  // namespace rigid

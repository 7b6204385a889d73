#pragma once

// Named small graphs shared by the unit and acceptance suites.

#include <algorithm>
#include <vector>

#include "rigid/graph.hpp"

namespace rigid::testing {

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return Graph(n, edges);
}

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n, edges);
}

/// Rim 0..k-1 plus hub k.
inline Graph wheel(int k) {
  std::vector<Edge> edges;
  for (int a = 0; a < k; ++a) {
    edges.emplace_back(a, (a + 1) % k);
    edges.emplace_back(a, k);
  }
  return Graph(k + 1, edges);
}

/// Triangles 0,1,2 and 3,4,5 joined by bars 0-3, 1-4, 2-5.
inline Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

inline Graph k33() {
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
  return Graph(6, edges);
}

/// Two triangles on the shared edge 0-1; apexes 2 and 3.
inline Graph two_triangles_sharing_edge() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

/// Two triangles sharing vertex 0.
inline Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

/// K4 on {0,1,2,3} and K4 on {0,1,4,5}: the shared edge is 0-1.
inline Graph two_k4() {
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

inline Graph k4_plus_pendant() {
  return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

/// Three components, each two K4s glued along an edge, closed into a ring
/// through single shared vertices. Every component has its two ring vertices
/// in different blocks, so the six K4 clusters admit no 2-shellable ordering.
inline Graph six_k4_ring() {
  // Component i: blocks {s,t,in,p} and {s,t,out,r} glued along s-t, where
  // `out` of component i is `in` of component i+1.
  std::vector<Edge> edges;
  int next = 3;  // 0,1,2 are the ring vertices
  auto k4 = [&](int a, int b, int c, int d) {
    int v[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.emplace_back(v[i], v[j]);
  };
  for (int i = 0; i < 3; ++i) {
    const int in = i, out = (i + 1) % 3;
    const int s = next++, t = next++, p = next++, r = next++;
    k4(s, t, in, p);
    k4(s, t, out, r);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(next, edges);
}

}  // namespace rigid::testing

#pragma once

#include <initializer_list>
#include <random>
#include <utility>

#include "cutq/graph.hpp"

namespace cutq::test {

inline GraphInstance make_graph(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  GraphInstance g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline GraphInstance k4() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline GraphInstance k3() { return make_graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline GraphInstance p4() { return make_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

// Triangles {0,1,2} and {3,4,5} joined by the bridge (2,3).
inline GraphInstance b6() {
  return make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
}

inline GraphInstance complete(Vertex n) {
  GraphInstance g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline GraphInstance path(Vertex n) {
  GraphInstance g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// Cliques on [0,k) and [k,2k) joined by (k-1, k).
inline GraphInstance two_cliques(Vertex k) {
  GraphInstance g(2 * k);
  for (Vertex base : {0, k})
    for (Vertex u = 0; u < k; ++u)
      for (Vertex v = u + 1; v < k; ++v) g.add_edge(base + u, base + v);
  g.add_edge(k - 1, k);
  return g;
}

inline GraphInstance random_graph(Vertex n, double p, std::uint64_t seed, Capacity W = 1) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Capacity> cap(1, W);
  GraphInstance g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v, cap(rng));
  return g;
}

}  // namespace cutq::test

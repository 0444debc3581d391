#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cutq/common.hpp"
#include "cutq/flow.hpp"
#include "cutq/view.hpp"

namespace cutq {

struct BfsTree {
  Vertex root = -1;
  std::vector<Vertex> parent;  // -1 for the root and for unreached vertices
  std::vector<int> dist;       // -1 when unreached

  bool reached(Vertex v) const { return dist[static_cast<std::size_t>(v)] >= 0; }
  VertexSet reached_set() const;
};

// Smallest b in B with a residual edge from A. Halves B by sorted position
// and probes the lower half first. Candidates whose residual edge from A is
// already decided by known capacities are settled without queries. With
// `any`, a neighbor already known to exist is returned without probing for
// a smaller one.
std::optional<Vertex> find_neighbor(OracleView& view, const Flow& f, std::span<const Vertex> A,
                                    std::span<const Vertex> B, bool any = false);

// Every candidate with a residual edge from U, sorted.
VertexSet neighborhood(OracleView& view, const Flow& f, std::span<const Vertex> U,
                       std::span<const Vertex> candidates);

// Vertex-by-vertex BFS in the residual graph, expanding in (dist, id) order.
BfsTree bfs_tree(OracleView& view, const Flow& f, Vertex root);

// Layer-at-a-time residual BFS from root. Stops after the layer containing
// `stop` when given; otherwise runs until no new vertex is found.
std::vector<VertexSet> bfs_layers(OracleView& view, const Flow& f, Vertex root, Vertex stop = -1);

}  // namespace cutq

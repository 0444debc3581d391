#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cutq/common.hpp"
#include "cutq/flow.hpp"
#include "cutq/view.hpp"

namespace cutq {

struct LayeredGraph {
  std::vector<VertexSet> layers;  // layers[0] = {s}, layers[d] = {t}
  std::vector<int> dist;          // layer index per view vertex, -1 outside

  int d() const { return static_cast<int>(layers.size()) - 1; }
};

struct MaxflowOptions {
  // Retreat to the vertex before the first saturated edge instead of
  // restarting the search stack at s after each path.
  bool partial_retreat = false;
};

struct RoundRecord {
  int d = 0;
  Capacity value = 0;             // flow added this round
  std::uint64_t cut_queries = 0;  // layering plus blocking flow
  std::uint64_t bis_queries = 0;
};

struct FlowResult {
  Flow flow;
  Capacity value = 0;
  VertexSet mincut_source_side;
  int rounds = 0;
  std::vector<RoundRecord> round_log;
};

struct FlowPath {
  std::vector<Vertex> vertices;
  Capacity units = 0;
};

// Residual BFS layers from s, cut at t's layer with every other vertex of
// that layer dropped. nullopt when t is unreachable.
std::optional<LayeredGraph> build_layered(OracleView& view, const Flow& f, Vertex s, Vertex t);

// One stack-based blocking flow on L. Augments f and returns the increment.
Flow blocking_flow_round(OracleView& view, Flow& f, const LayeredGraph& L,
                         const MaxflowOptions& opts = {});

FlowResult dinitz_maxflow(OracleView& view, Vertex s, Vertex t, const MaxflowOptions& opts = {});

// Paths carrying f from source to sink; flow cycles are cancelled first.
std::vector<FlowPath> path_decomposition(const Flow& f);

}  // namespace cutq

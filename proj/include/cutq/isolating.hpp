#pragma once

#include <optional>
#include <vector>

#include "cutq/common.hpp"
#include "cutq/graph.hpp"
#include "cutq/view.hpp"

namespace cutq {

struct Bipartition {
  VertexSet A;
  VertexSet B;
};

struct PartitionCut {
  VertexSet side;           // C_A, in the caller's view ids
  VertexSet saturated;      // terminals whose source/sink paths are all used
  std::vector<Edge> boundary;  // edges leaving C_A, capacity as seen in the view
  Capacity flow_value = 0;
};

struct TerminalRecord {
  Vertex r = -1;
  Capacity lambda = kInfinity;
  std::optional<VertexSet> side;
};

struct IsolatingResult {
  std::vector<TerminalRecord> records;  // one per terminal, ascending r
  VertexSet unsaturated;                // R'
  std::vector<VertexSet> regions;       // T_r for r in R', same order
  std::optional<Vertex> best;
  bool found = false;

  const TerminalRecord& record(Vertex r) const;
};

// ceil(log2 |R|) bipartitions; partition i puts a terminal in A when bit i
// of its rank in R is 0.
std::vector<Bipartition> bit_partitions(const VertexSet& R);

// Closest A-B min cut with terminal edges of capacity tau+1.
PartitionCut partition_mincut(OracleView& view, const VertexSet& A, const VertexSet& B, Capacity tau);

// Minimum isolating cuts of R restricted to values <= tau. `view` must have
// no virtual vertices.
IsolatingResult isolating_cuts(OracleView& view, const VertexSet& R, Capacity tau);

}  // namespace cutq

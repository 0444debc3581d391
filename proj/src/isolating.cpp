#include "cutq/isolating.hpp"

#include <bit>
#include <map>

#include "cutq/maxflow.hpp"
#include "cutq/primitives.hpp"

namespace cutq {

const TerminalRecord& IsolatingResult::record(Vertex r) const {
  auto it = std::lower_bound(records.begin(), records.end(), r,
                             [](const TerminalRecord& t, Vertex v) { return t.r < v; });
  require(it != records.end() && it->r == r, "not a terminal: " + std::to_string(r));
  return *it;
}

std::vector<Bipartition> bit_partitions(const VertexSet& R_in) {
  const VertexSet R = canonical(R_in);
  require(R.size() >= 2, "bit partitions need at least two terminals");
  const int bits = std::bit_width(R.size() - 1);
  std::vector<Bipartition> out(static_cast<std::size_t>(bits));
  for (std::size_t rank = 0; rank < R.size(); ++rank)
    for (int b = 0; b < bits; ++b)
      (rank >> b & 1 ? out[static_cast<std::size_t>(b)].B : out[static_cast<std::size_t>(b)].A).push_back(R[rank]);
  return out;
}

PartitionCut partition_mincut(OracleView& view, const VertexSet& A_in, const VertexSet& B_in, Capacity tau) {
  require(tau >= 0, "tau must be non-negative");
  const VertexSet A = canonical(A_in), B = canonical(B_in);
  require(disjoint(A, B), "partition sides overlap");
  std::vector<Terminal> ta, tb;
  for (Vertex a : A) ta.push_back({a, tau + 1});
  for (Vertex b : B) tb.push_back({b, tau + 1});
  OracleView aug = OracleView::augmented(view, ta, tb);
  FlowResult fr = dinitz_maxflow(aug, aug.source(), aug.sink());

  const Vertex N = view.size();
  PartitionCut out;
  out.flow_value = fr.value;
  for (Vertex v : fr.mincut_source_side)
    if (v < N) out.side.push_back(v);
  for (const auto& p : aug.terminal_paths()) {
    Capacity used = 0;
    for (Vertex h : p.hubs) used += p.source_side ? fr.flow.at(aug.source(), h) : fr.flow.at(h, aug.sink());
    if (used == static_cast<Capacity>(p.hubs.size())) out.saturated.push_back(p.terminal);
  }
  std::sort(out.saturated.begin(), out.saturated.end());
  // Every edge leaving the residual-reachable side is saturated, so the flow
  // lists the whole boundary with exact capacities.
  for (Vertex u : out.side)
    for (const auto& [v, x] : fr.flow.row(u))
      if (v < N && x > 0 && !contains(out.side, v)) out.boundary.push_back({u, v, x});
  return out;
}

IsolatingResult isolating_cuts(OracleView& view, const VertexSet& R_in, Capacity tau) {
  const VertexSet R = canonical(R_in);
  require(R.size() >= 2, "isolating cuts need at least two terminals");
  for (Vertex x = 0; x < view.size(); ++x)
    require(!view.is_virtual(x), "isolating cuts need a view without virtual vertices");

  std::map<std::pair<Vertex, Vertex>, Capacity> removed;
  VertexSet excluded;
  {
    PhaseScope phase(view.ledger(), "isolating/partitions");
    for (const auto& part : bit_partitions(R)) {
      PartitionCut pc = partition_mincut(view, part.A, part.B, tau);
      for (const auto& e : pc.boundary) removed[{std::min(e.u, e.v), std::max(e.u, e.v)}] = e.w;
      excluded.insert(excluded.end(), pc.saturated.begin(), pc.saturated.end());
      for (Vertex a : part.A)
        if (!contains(pc.side, a)) excluded.push_back(a);
      for (Vertex b : part.B)
        if (contains(pc.side, b)) excluded.push_back(b);
    }
  }
  std::vector<Edge> cut_edges;
  for (const auto& [uv, w] : removed) cut_edges.push_back({uv.first, uv.second, w});

  IsolatingResult out;
  out.unsaturated = set_difference(R, canonical(std::move(excluded)));
  {
    PhaseScope phase(view.ledger(), "isolating/regions");
    OracleView pruned = OracleView::without_edges(view, cut_edges);
    for (Vertex r : out.unsaturated) {
      VertexSet region;
      for (const auto& layer : bfs_layers(pruned, Flow(pruned.size(), r, r), r))
        region.insert(region.end(), layer.begin(), layer.end());
      std::sort(region.begin(), region.end());
      for (const auto& other : out.regions)
        ensure(disjoint(other, region), "isolating regions overlap");
      out.regions.push_back(std::move(region));
    }
  }

  PhaseScope phase(view.ledger(), "isolating/local");
  for (Vertex r : R) out.records.push_back({r, kInfinity, std::nullopt});
  for (std::size_t i = 0; i < out.unsaturated.size(); ++i) {
    const Vertex r = out.unsaturated[i];
    VertexSet keep = set_difference(out.regions[i], R);
    keep.insert(std::lower_bound(keep.begin(), keep.end(), r), r);
    OracleView local = OracleView::contracted(view, keep);
    const Vertex lr = static_cast<Vertex>(std::lower_bound(keep.begin(), keep.end(), r) - keep.begin());
    const Vertex sr = local.contracted_vertex();
    const Capacity direct = local.remove_direct_edge(lr, sr);
    FlowResult fr = dinitz_maxflow(local, lr, sr);
    VertexSet side;
    for (Vertex x : fr.mincut_source_side) side.push_back(local.origin(x));
    auto& rec = out.records[static_cast<std::size_t>(std::lower_bound(R.begin(), R.end(), r) - R.begin())];
    rec.lambda = direct + fr.value;
    rec.side = std::move(side);
  }
  for (const auto& rec : out.records)
    if (rec.lambda != kInfinity && (!out.best || rec.lambda < out.record(*out.best).lambda)) out.best = rec.r;
  out.found = out.best && out.record(*out.best).lambda <= tau;
  return out;
}

}  // namespace cutq

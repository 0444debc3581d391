#include "cutq/maxflow.hpp"

#include <map>

#include "cutq/primitives.hpp"

namespace cutq {

namespace {

std::optional<LayeredGraph> layered_from(std::vector<VertexSet> layers, Vertex t, Vertex size) {
  if (!contains(layers.back(), t)) return std::nullopt;
  layers.back() = {t};
  LayeredGraph L{std::move(layers), std::vector<int>(static_cast<std::size_t>(size), -1)};
  for (std::size_t i = 0; i < L.layers.size(); ++i)
    for (Vertex v : L.layers[i]) L.dist[static_cast<std::size_t>(v)] = static_cast<int>(i);
  if (L.d() > size) return std::nullopt;
  return L;
}

}  // namespace

std::optional<LayeredGraph> build_layered(OracleView& view, const Flow& f, Vertex s, Vertex t) {
  require(s != t, "source equals sink");
  return layered_from(bfs_layers(view, f, s, t), t, view.size());
}

Flow blocking_flow_round(OracleView& view, Flow& f, const LayeredGraph& L, const MaxflowOptions& opts) {
  const Vertex s = f.source(), t = f.sink();
  ensure(f.size() == view.size(), "flow does not belong to this view");
  ensure(L.layers.size() >= 2 && L.layers.front() == VertexSet{s} && L.layers.back() == VertexSet{t},
         "layered graph does not match the flow terminals");
  std::vector<VertexSet> alive = L.layers;
  Flow inc(f.size(), s, t);
  std::vector<Vertex> stack{s};
  while (!stack.empty()) {
    const Vertex u = stack.back();
    const int i = L.dist[static_cast<std::size_t>(u)];
    ensure(i == static_cast<int>(stack.size()) - 1, "search stack left the layered graph");
    if (u == t) {
      Capacity bottleneck = kInfinity;
      for (std::size_t k = 0; k + 1 < stack.size(); ++k) {
        const Capacity r = view.learn_capacity(stack[k], stack[k + 1]) - f.at(stack[k], stack[k + 1]);
        ensure(r > 0, "augmenting path has a saturated edge");
        bottleneck = std::min(bottleneck, r);
      }
      std::size_t keep = 1;
      bool cut = false;
      for (std::size_t k = 0; k + 1 < stack.size(); ++k) {
        f.push(stack[k], stack[k + 1], bottleneck);
        inc.push(stack[k], stack[k + 1], bottleneck);
        if (!cut && view.learn_capacity(stack[k], stack[k + 1]) == f.at(stack[k], stack[k + 1])) {
          keep = k + 1;
          cut = true;
        }
      }
      stack.resize(opts.partial_retreat ? keep : 1);
      continue;
    }
    const Vertex single[1] = {u};
    const auto& next = alive[static_cast<std::size_t>(i) + 1];
    if (auto v = find_neighbor(view, f, single, next, true)) {
      stack.push_back(*v);
      continue;
    }
    stack.pop_back();
    auto& layer = alive[static_cast<std::size_t>(i)];
    layer.erase(std::lower_bound(layer.begin(), layer.end(), u));
  }
  return inc;
}

FlowResult dinitz_maxflow(OracleView& view, Vertex s, Vertex t, const MaxflowOptions& opts) {
  require(s >= 0 && s < view.size() && t >= 0 && t < view.size(), "terminal out of range");
  require(s != t, "source equals sink");
  FlowResult out{Flow(view.size(), s, t), 0, {}, 0, {}};
  int prev = -1;
  while (true) {
    const auto before = view.ledger().snapshot();
    auto layers = bfs_layers(view, out.flow, s, t);
    auto L = layered_from(layers, t, view.size());
    if (!L) {
      for (const auto& layer : layers) out.mincut_source_side.insert(out.mincut_source_side.end(), layer.begin(), layer.end());
      std::sort(out.mincut_source_side.begin(), out.mincut_source_side.end());
      break;
    }
    ensure(L->d() > prev, "s-t distance did not increase");
    prev = L->d();
    Flow inc = blocking_flow_round(view, out.flow, *L, opts);
    const auto after = view.ledger().snapshot();
    ensure(inc.value() > 0, "blocking flow found no path");
    out.round_log.push_back({L->d(), inc.value(), after.cuts - before.cuts, after.bis - before.bis});
    ++out.rounds;
  }
  out.value = out.flow.value();
  return out;
}

std::vector<FlowPath> path_decomposition(const Flow& f) {
  ensure(f.conserves(), "flow violates conservation");
  const Vertex s = f.source(), t = f.sink();
  const auto n = static_cast<std::size_t>(f.size());
  std::vector<std::map<Vertex, Capacity>> pos(n);
  for (Vertex u = 0; u < f.size(); ++u)
    for (const auto& [v, x] : f.row(u))
      if (x > 0) pos[static_cast<std::size_t>(u)][v] = x;
  auto drain = [&](const std::vector<Vertex>& seq, std::size_t from, Capacity amount) {
    for (std::size_t k = from; k + 1 < seq.size(); ++k) {
      auto& row = pos[static_cast<std::size_t>(seq[k])];
      auto it = row.find(seq[k + 1]);
      if ((it->second -= amount) == 0) row.erase(it);
    }
  };

  std::vector<FlowPath> paths;
  std::vector<int> at(n, -1);
  while (!pos[static_cast<std::size_t>(s)].empty()) {
    std::vector<Vertex> seq{s};
    at[static_cast<std::size_t>(s)] = 0;
    while (seq.back() != t) {
      const auto& row = pos[static_cast<std::size_t>(seq.back())];
      if (row.empty()) {
        ensure(seq.size() == 1, "flow support dead-ends before the sink");
        break;
      }
      const Vertex v = row.begin()->first;
      if (const int k = at[static_cast<std::size_t>(v)]; k >= 0) {
        // Cancel the cycle seq[k..] -> v.
        std::vector<Vertex> cycle(seq.begin() + k, seq.end());
        cycle.push_back(v);
        Capacity m = kInfinity;
        for (std::size_t j = 0; j + 1 < cycle.size(); ++j)
          m = std::min(m, pos[static_cast<std::size_t>(cycle[j])].at(cycle[j + 1]));
        drain(cycle, 0, m);
        for (std::size_t j = static_cast<std::size_t>(k) + 1; j < seq.size(); ++j)
          at[static_cast<std::size_t>(seq[j])] = -1;
        seq.resize(static_cast<std::size_t>(k) + 1);
        continue;
      }
      at[static_cast<std::size_t>(v)] = static_cast<int>(seq.size());
      seq.push_back(v);
    }
    for (Vertex v : seq) at[static_cast<std::size_t>(v)] = -1;
    if (seq.back() != t) break;
    Capacity m = kInfinity;
    for (std::size_t j = 0; j + 1 < seq.size(); ++j)
      m = std::min(m, pos[static_cast<std::size_t>(seq[j])].at(seq[j + 1]));
    drain(seq, 0, m);
    paths.push_back({std::move(seq), m});
  }
  return paths;
}

}  // namespace cutq

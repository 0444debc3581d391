#include "cutq/primitives.hpp"

namespace cutq {

namespace {

// Candidates settled without queries, and the rest. Pairs touching a virtual
// vertex have exactly known capacity; plain pairs are settled when learned
// (single-vertex A) or when the flow runs backwards along them.
struct Triage {
  VertexSet positive;
  VertexSet unknown;
  VertexSet plain_a;
};

// Row entries whose endpoint lies in `within`, parallel entries summed.
std::vector<std::pair<Vertex, Capacity>> restricted(const OracleView::Row& row, const VertexSet& within) {
  std::vector<std::pair<Vertex, Capacity>> out;
  for (const auto& e : row)
    if (contains(within, e.first)) out.push_back(e);
  std::sort(out.begin(), out.end());
  std::size_t k = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (k > 0 && out[k - 1].first == out[i].first) out[k - 1].second += out[i].second;
    else out[k++] = out[i];
  }
  out.resize(k);
  return out;
}

Triage triage(OracleView& view, const Flow& f, const VertexSet& A, const VertexSet& C) {
  Triage t;
  VertexSet hits;
  for (Vertex a : A) {
    if (view.is_virtual(a)) {
      for (const auto& [y, c] : restricted(view.virtual_row(a), C))
        if (c - f.at(a, y) > 0) hits.push_back(y);
      continue;
    }
    t.plain_a.push_back(a);
    for (const auto& [y, c] : view.known_positive(a))
      if (c - f.at(a, y) > 0 && contains(C, y)) hits.push_back(y);
    for (const auto& [y, x] : f.row(a))
      if (x < 0 && contains(C, y)) hits.push_back(y);
  }
  t.positive = canonical(std::move(hits));
  if (t.plain_a.empty()) return t;
  for (Vertex y : C) {
    if (contains(t.positive, y)) continue;
    if (view.is_virtual(y)) {
      for (const auto& [a, c] : restricted(view.virtual_row(y), A))
        if (c - f.at(a, y) > 0) {
          t.positive.insert(std::lower_bound(t.positive.begin(), t.positive.end(), y), y);
          break;
        }
      continue;
    }
    // Settled when every residual capacity into y is known to be zero.
    bool settled = true;
    for (Vertex a : t.plain_a) {
      const auto c = view.known_capacity(a, y);
      if (!c || *c - f.at(a, y) > 0) {
        settled = false;
        break;
      }
    }
    if (!settled) t.unknown.push_back(y);
  }
  return t;
}

VertexSet collect(OracleView& view, const Flow& f, const VertexSet& A, std::span<const Vertex> S,
                  bool known_true) {
  if (S.empty()) return {};
  if (!known_true && !view.residual_bis(f, A, S)) {
    if (A.size() == 1)
      for (Vertex y : S) view.note_residual(f, A[0], y, false);
    return {};
  }
  if (S.size() == 1) {
    if (A.size() == 1) view.note_residual(f, A[0], S[0], true);
    return {S[0]};
  }
  const std::size_t half = S.size() / 2;
  VertexSet lo = collect(view, f, A, S.subspan(0, half), false);
  VertexSet hi = collect(view, f, A, S.subspan(half), lo.empty());
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

}  // namespace

VertexSet BfsTree::reached_set() const {
  VertexSet out;
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (dist[v] >= 0) out.push_back(static_cast<Vertex>(v));
  return out;
}

std::optional<Vertex> find_neighbor(OracleView& view, const Flow& f, std::span<const Vertex> A_in,
                                    std::span<const Vertex> B_in, bool any) {
  const VertexSet A = canonical(VertexSet(A_in.begin(), A_in.end()));
  const VertexSet B = canonical(VertexSet(B_in.begin(), B_in.end()));
  require(disjoint(A, B), "find_neighbor sets overlap");
  if (A.empty() || B.empty()) return std::nullopt;
  Triage t = triage(view, f, A, B);
  std::optional<Vertex> best;
  if (!t.positive.empty()) best = t.positive.front();
  if (best && any) return best;
  std::span<const Vertex> S(t.unknown);
  if (best) S = S.first(static_cast<std::size_t>(std::lower_bound(S.begin(), S.end(), *best) - S.begin()));
  const bool single = t.plain_a.size() == 1;
  auto none = [&](std::span<const Vertex> part) {
    if (single)
      for (Vertex y : part) view.note_residual(f, t.plain_a[0], y, false);
  };
  if (S.empty()) return best;
  if (!view.residual_bis(f, t.plain_a, S)) {
    none(S);
    return best;
  }
  while (S.size() > 1) {
    auto lower = S.first(S.size() / 2);
    if (view.residual_bis(f, t.plain_a, lower)) {
      S = lower;
    } else {
      none(lower);
      S = S.subspan(S.size() / 2);
    }
  }
  if (single) view.note_residual(f, t.plain_a[0], S[0], true);
  return S[0];
}

VertexSet neighborhood(OracleView& view, const Flow& f, std::span<const Vertex> U_in,
                       std::span<const Vertex> candidates) {
  const VertexSet U = canonical(VertexSet(U_in.begin(), U_in.end()));
  const VertexSet C = canonical(VertexSet(candidates.begin(), candidates.end()));
  require(disjoint(U, C), "neighborhood sets overlap");
  if (U.empty() || C.empty()) return {};
  Triage t = triage(view, f, U, C);
  VertexSet found = collect(view, f, t.plain_a, t.unknown, false);
  return set_union(t.positive, found);
}

BfsTree bfs_tree(OracleView& view, const Flow& f, Vertex root) {
  require(root >= 0 && root < view.size(), "bfs root out of range");
  const auto n = static_cast<std::size_t>(view.size());
  BfsTree tree{root, std::vector<Vertex>(n, -1), std::vector<int>(n, -1)};
  tree.dist[static_cast<std::size_t>(root)] = 0;
  VertexSet undiscovered = set_difference(view.universe(), VertexSet{root});
  VertexSet layer{root};
  for (int d = 0; !layer.empty() && !undiscovered.empty(); ++d) {
    VertexSet next;
    for (Vertex u : layer) {
      if (undiscovered.empty()) break;
      const Vertex single[1] = {u};
      for (Vertex v : neighborhood(view, f, single, undiscovered)) {
        tree.parent[static_cast<std::size_t>(v)] = u;
        tree.dist[static_cast<std::size_t>(v)] = d + 1;
        next.push_back(v);
      }
      undiscovered = set_difference(undiscovered, canonical(next));
    }
    layer = canonical(std::move(next));
  }
  return tree;
}

std::vector<VertexSet> bfs_layers(OracleView& view, const Flow& f, Vertex root, Vertex stop) {
  require(root >= 0 && root < view.size(), "bfs root out of range");
  std::vector<VertexSet> layers{{root}};
  VertexSet undiscovered = set_difference(view.universe(), VertexSet{root});
  while (!undiscovered.empty()) {
    VertexSet next = neighborhood(view, f, layers.back(), undiscovered);
    if (next.empty()) break;
    undiscovered = set_difference(undiscovered, next);
    layers.push_back(std::move(next));
    if (stop >= 0 && contains(layers.back(), stop)) break;
  }
  return layers;
}

}  // namespace cutq

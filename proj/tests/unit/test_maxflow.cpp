#include <gtest/gtest.h>

#include <functional>

#include "cutq/maxflow.hpp"
#include "explicit.hpp"
#include "support.hpp"

using namespace cutq;
using namespace cutq::test;

TEST(Layered, Examples) {
  GraphInstance B6 = b6(), K4 = k4();
  Oracle a(B6), b(K4);
  auto va = OracleView::base(a);
  auto vb = OracleView::base(b);
  auto L = build_layered(va, Flow(6, 0, 5), 0, 5);
  ASSERT_TRUE(L);
  // Explicit BFS: 0 | 1 2 | 3 | 5 (4 shares the last layer and is dropped).
  auto want = residual_distances(capacity_matrix(B6), Flow(6, 0, 5), 0);
  EXPECT_EQ(L->d(), want[5]);
  EXPECT_EQ(L->layers[1], (VertexSet{1, 2}));
  EXPECT_EQ(L->layers.back(), (VertexSet{5}));

  Flow sat(6, 0, 5);
  sat.push(0, 2, 1);
  sat.push(2, 3, 1);
  sat.push(3, 5, 1);
  EXPECT_FALSE(build_layered(va, sat, 0, 5));

  auto K = build_layered(vb, Flow(4, 0, 3), 0, 3);
  ASSERT_TRUE(K);
  EXPECT_EQ(K->d(), 1);
}

TEST(BlockingFlow, Examples) {
  GraphInstance B6 = b6(), K4 = k4();
  Oracle a(B6), b(K4);
  auto va = OracleView::base(a);
  Flow f(6, 0, 5);
  auto L = build_layered(va, f, 0, 5);
  Flow inc = blocking_flow_round(va, f, *L);
  EXPECT_EQ(inc.value(), 1);
  EXPECT_FALSE(build_layered(va, f, 0, 5));

  auto vb = OracleView::base(b);
  Flow g(4, 0, 3);
  auto K = build_layered(vb, g, 0, 3);
  Flow inc2 = blocking_flow_round(vb, g, *K);
  EXPECT_EQ(inc2.value(), 1);
  EXPECT_EQ(inc2.at(0, 3), 1);
}

TEST(BlockingFlow, CompleteBipartiteFirstRound) {
  // s=0, left {1,2,3}, right {4,5,6}, t=7.
  GraphInstance g(8);
  for (Vertex l = 1; l <= 3; ++l) {
    g.add_edge(0, l);
    g.add_edge(l + 3, 7);
    for (Vertex r = 4; r <= 6; ++r) g.add_edge(l, r);
  }
  Oracle o(g);
  auto v = OracleView::base(o);
  Flow f(8, 0, 7);
  auto L = build_layered(v, f, 0, 7);
  ASSERT_EQ(L->d(), 3);
  EXPECT_EQ(blocking_flow_round(v, f, *L).value(), 3);
  EXPECT_EQ(explicit_maxflow(capacity_matrix(g), 0, 7), 3);
}

namespace {

// True when some s-t path inside the layered graph still has residual room.
bool layered_path_exists(const Matrix& c, const Flow& f, const LayeredGraph& L) {
  const Vertex s = L.layers.front()[0], t = L.layers.back()[0];
  std::vector<char> seen(c.size(), 0);
  std::function<bool(Vertex)> go = [&](Vertex u) {
    if (u == t) return true;
    seen[u] = 1;
    for (Vertex v = 0; v < static_cast<Vertex>(c.size()); ++v)
      if (!seen[v] && L.dist[v] == L.dist[u] + 1 && residual(c, f, u, v) > 0 && go(v)) return true;
    return false;
  };
  return go(s);
}

}  // namespace

TEST(BlockingFlow, EveryLayeredPathIsSaturated) {
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 5 + trial % 8;
    GraphInstance g = random_graph(n, 0.45, 1300 + trial, 1 + trial % 3);
    Matrix c = capacity_matrix(g);
    Oracle o(g);
    auto v = OracleView::base(o);
    Flow f(n, 0, n - 1);
    MaxflowOptions opts{.partial_retreat = trial % 2 == 1};
    int prev = -1;
    while (auto L = build_layered(v, f, 0, n - 1)) {
      ASSERT_GT(L->d(), prev);
      prev = L->d();
      blocking_flow_round(v, f, *L, opts);
      ASSERT_TRUE(f.conserves());
      ASSERT_FALSE(layered_path_exists(c, f, *L));
    }
    EXPECT_EQ(f.value(), explicit_maxflow(c, 0, n - 1));
  }
}

TEST(Dinitz, Examples) {
  GraphInstance B6 = b6(), K4 = k4();
  Oracle a(B6), b(K4);
  auto va = OracleView::base(a);
  auto vb = OracleView::base(b);
  auto r = dinitz_maxflow(va, 0, 5);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.mincut_source_side, (VertexSet{0, 1, 2}));
  EXPECT_EQ(dinitz_maxflow(vb, 0, 3).value, 3);
  EXPECT_THROW(dinitz_maxflow(vb, 1, 1), InputError);
}

TEST(Dinitz, MatchesReferenceAndDuality) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Vertex n = 5 + static_cast<Vertex>(rng() % 36);
    const double p = 0.1 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
    GraphInstance g = random_graph(n, p, 1400 + trial, 1 + trial % 3);
    Matrix c = capacity_matrix(g);
    const Vertex s = static_cast<Vertex>(rng() % n);
    Vertex t = static_cast<Vertex>(rng() % n);
    if (t == s) t = (s + 1) % n;
    Oracle o(g);
    auto v = OracleView::base(o);
    auto r = dinitz_maxflow(v, s, t);
    ASSERT_EQ(r.value, explicit_maxflow(c, s, t)) << "trial " << trial;
    ASSERT_TRUE(contains(r.mincut_source_side, s));
    ASSERT_FALSE(contains(r.mincut_source_side, t));
    ASSERT_EQ(set_cut(c, r.mincut_source_side), r.value);
    for (std::size_t i = 1; i < r.round_log.size(); ++i)
      ASSERT_GT(r.round_log[i].d, r.round_log[i - 1].d);
  }
}

TEST(Dinitz, WorksOnAugmentedView) {
  GraphInstance K4 = k4();
  Oracle o(K4);
  auto base = OracleView::base(o);
  const Terminal A[] = {{0, 2}, {1, 2}}, B[] = {{2, 2}, {3, 2}};
  auto v = OracleView::augmented(base, A, B);
  auto r = dinitz_maxflow(v, v.source(), v.sink());
  EXPECT_EQ(r.value, 4);
}

TEST(PathDecomposition, Examples) {
  GraphInstance B6 = b6(), K4 = k4();
  Oracle a(B6), b(K4);
  auto va = OracleView::base(a);
  auto vb = OracleView::base(b);
  auto r = dinitz_maxflow(va, 0, 5);
  auto paths = path_decomposition(r.flow);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].units, 1);
  auto k = dinitz_maxflow(vb, 0, 3);
  auto kp = path_decomposition(k.flow);
  EXPECT_EQ(kp.size(), 3u);
  Capacity sum = 0;
  for (const auto& p : kp) {
    sum += p.units;
    EXPECT_EQ(p.vertices.front(), 0);
    EXPECT_EQ(p.vertices.back(), 3);
  }
  EXPECT_EQ(sum, 3);
  EXPECT_TRUE(path_decomposition(Flow(4, 0, 3)).empty());
}

TEST(PathDecomposition, CancelsCycles) {
  Flow f(5, 0, 4);
  f.push(0, 1, 2);
  f.push(1, 4, 2);
  f.push(1, 2, 1);
  f.push(2, 3, 1);
  f.push(3, 1, 1);
  auto paths = path_decomposition(f);
  Capacity sum = 0;
  for (const auto& p : paths) sum += p.units;
  EXPECT_EQ(sum, 2);
  for (const auto& p : paths) EXPECT_EQ(p.vertices, (std::vector<Vertex>{0, 1, 4}));
  Flow bad(3, 0, 2);
  bad.push(0, 1, 1);
  EXPECT_THROW(path_decomposition(bad), ContractViolation);
}

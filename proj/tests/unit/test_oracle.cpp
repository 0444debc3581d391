#include <gtest/gtest.h>

#include <sstream>

#include "cutq/oracle.hpp"
#include "cutq/view.hpp"
#include "explicit.hpp"
#include "support.hpp"

using namespace cutq;
using namespace cutq::test;

namespace {

OracleOptions metered() { return {.memoize = false, .record_transcript = true}; }

VertexSet bits_to_set(std::uint64_t mask, Vertex n) {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1) s.push_back(v);
  return s;
}

}  // namespace

TEST(Graph, ParseAndRoundTrip) {
  std::istringstream in("# comment\n3 2\n0 1\n1 2 5\n");
  GraphInstance g = GraphInstance::parse(in);
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_EQ(g.capacity(1, 2), 5);
  EXPECT_EQ(g.max_capacity(), 5);
  std::ostringstream out;
  g.write(out);
  std::istringstream back(out.str());
  EXPECT_EQ(GraphInstance::parse(back), g);
}

TEST(Graph, RejectsBadInput) {
  std::istringstream loop("2 1\n0 0\n");
  EXPECT_THROW(GraphInstance::parse(loop), InputError);
  std::istringstream dup("3 2\n0 1\n1 0\n");
  EXPECT_THROW(GraphInstance::parse(dup), InputError);
  std::istringstream zero("2 1\n0 1 0\n");
  EXPECT_THROW(GraphInstance::parse(zero), InputError);
  std::istringstream range("2 1\n0 2\n");
  EXPECT_THROW(GraphInstance::parse(range), InputError);
}

TEST(Oracle, CutExamples) {
  GraphInstance K4 = k4(), B6 = b6();
  Oracle a(K4, metered()), b(B6, metered());
  auto va = OracleView::base(a);
  auto vb = OracleView::base(b);
  EXPECT_EQ(va.cut(VertexSet{0}), 3);
  EXPECT_EQ(va.cut(VertexSet{0, 1}), 4);
  EXPECT_EQ(vb.cut(VertexSet{0, 1, 2}), 1);
  EXPECT_EQ(a.ledger().cut_count(), 2u);
  EXPECT_EQ(b.ledger().cut_count(), 1u);
}

TEST(Oracle, EmptyAndFullAreFree) {
  GraphInstance K4 = k4();
  Oracle o(K4, metered());
  auto v = OracleView::base(o);
  EXPECT_EQ(v.cut(VertexSet{}), 0);
  EXPECT_EQ(v.cut(VertexSet{0, 1, 2, 3}), 0);
  EXPECT_EQ(o.ledger().cut_count(), 0u);
  EXPECT_EQ(o.ledger().free_count(), 2u);
  EXPECT_TRUE(o.ledger().transcript().empty());
}

TEST(Oracle, RejectsOutOfRange) {
  GraphInstance K4 = k4();
  Oracle o(K4);
  auto v = OracleView::base(o);
  EXPECT_THROW(v.cut(VertexSet{4}), InputError);
  EXPECT_THROW(v.cut(VertexSet{-1}), InputError);
}

TEST(Oracle, UnsortedInputIsCanonicalized) {
  GraphInstance B6 = b6();
  Oracle o(B6, metered());
  auto v = OracleView::base(o);
  EXPECT_EQ(v.cut(VertexSet{2, 0, 1, 1}), 1);
  EXPECT_EQ(o.ledger().transcript().back().set, (VertexSet{0, 1, 2}));
}

TEST(Oracle, MemoAnswersRepeatsWithoutCharge) {
  GraphInstance B6 = b6();
  Oracle o(B6, {.memoize = true});
  auto v = OracleView::base(o);
  EXPECT_EQ(v.cut(VertexSet{0, 1, 2}), 1);
  EXPECT_EQ(v.cut(VertexSet{3, 4, 5}), 1);  // complement shares the entry
  EXPECT_EQ(v.cut(VertexSet{0, 1, 2}), 1);
  EXPECT_EQ(o.ledger().cut_count(), 1u);
  EXPECT_EQ(o.ledger().memo_hit_count(), 2u);
}

TEST(Oracle, PairCapacityExamples) {
  GraphInstance K3 = k3(), B6 = b6();
  Oracle a(K3, metered()), b(B6, metered());
  auto va = OracleView::base(a);
  auto vb = OracleView::base(b);
  EXPECT_EQ(va.pair_capacity(VertexSet{0}, VertexSet{1}), 1);
  EXPECT_EQ(vb.pair_capacity(VertexSet{0, 1, 2}, VertexSet{3, 4, 5}), 1);
  EXPECT_EQ(a.ledger().cut_count(), 3u);
  EXPECT_EQ(b.ledger().cut_count(), 2u);  // A∪B = V is the free full set
  EXPECT_THROW(vb.pair_capacity(VertexSet{0, 1}, VertexSet{1, 2}), InputError);
  EXPECT_THROW(vb.pair_capacity(VertexSet{}, VertexSet{1}), InputError);
}

TEST(Oracle, PairCapacityMatchesAdjacencySum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    GraphInstance g = random_graph(10, 0.4, 100 + trial, 1 + trial % 3);
    Matrix c = capacity_matrix(g);
    Oracle o(g, metered());
    auto v = OracleView::base(o);
    for (int q = 0; q < 20; ++q) {
      VertexSet A, B;
      for (Vertex x = 0; x < 10; ++x) {
        auto side = rng() % 3;
        if (side == 0) A.push_back(x);
        if (side == 1) B.push_back(x);
      }
      if (A.empty() || B.empty()) continue;
      Capacity want = 0;
      for (Vertex a : A)
        for (Vertex b : B) want += c[a][b];
      const auto before = o.ledger().cut_count();
      EXPECT_EQ(v.pair_capacity(A, B), want);
      EXPECT_EQ(o.ledger().cut_count() - before, A.size() + B.size() == 10 ? 2u : 3u);
    }
  }
}

TEST(Oracle, BisExamplesAndCost) {
  GraphInstance P4 = p4(), B6 = b6();
  Oracle a(P4, metered()), b(B6, metered());
  auto va = OracleView::base(a);
  auto vb = OracleView::base(b);
  EXPECT_FALSE(va.bis(VertexSet{0}, VertexSet{2, 3}));
  EXPECT_TRUE(va.bis(VertexSet{1}, VertexSet{2, 3}));
  EXPECT_FALSE(vb.bis(VertexSet{0}, VertexSet{3, 4, 5}));
  EXPECT_EQ(a.ledger().bis_count(), 2u);
  EXPECT_EQ(a.ledger().cut_count(), 6u);
  EXPECT_EQ(b.ledger().cut_count(), 3u);
  EXPECT_THROW(vb.bis(VertexSet{0}, VertexSet{0, 1}), InputError);
}

TEST(Oracle, ResidualBisExamples) {
  GraphInstance B6 = b6();
  Oracle o(B6, metered());
  auto v = OracleView::base(o);
  Flow f(6, 0, 5);
  f.push(0, 2, 1);
  f.push(2, 3, 1);
  f.push(3, 5, 1);
  EXPECT_FALSE(v.residual_bis(f, VertexSet{2}, VertexSet{3}));
  EXPECT_TRUE(v.residual_bis(f, VertexSet{3}, VertexSet{2}));
  EXPECT_EQ(o.ledger().cut_count(), 6u);
  EXPECT_EQ(o.ledger().bis_count(), 2u);
  Flow wrong(4, 0, 1);
  EXPECT_THROW(v.residual_bis(wrong, VertexSet{0}, VertexSet{1}), ContractViolation);
}

TEST(Oracle, ResidualBisMatchesExplicitResidualGraph) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const Vertex n = 6 + trial % 3;
    GraphInstance g = random_graph(n, 0.5, 300 + trial, 1 + trial % 2);
    Matrix c = capacity_matrix(g);
    Flow f = trial % 4 == 0 ? Flow(n, 0, n - 1) : random_flow(c, 0, n - 1, 1 + trial % 3, rng);
    Oracle o(g, {.memoize = true});
    auto v = OracleView::base(o);
    // Every ordered pair of disjoint nonempty sets: 3^n labelings.
    std::uint64_t total = 1;
    for (Vertex i = 0; i < n; ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
      VertexSet A, B;
      std::uint64_t x = code;
      for (Vertex i = 0; i < n; ++i, x /= 3) {
        if (x % 3 == 1) A.push_back(i);
        if (x % 3 == 2) B.push_back(i);
      }
      if (A.empty() || B.empty()) continue;
      bool want = false;
      for (Vertex a : A)
        for (Vertex b : B) want = want || residual(c, f, a, b) > 0;
      ASSERT_EQ(v.residual_bis(f, A, B), want);
      if (f.empty()) ASSERT_EQ(v.bis(A, B), want);
    }
  }
}

TEST(Oracle, TranscriptReplayIsExact) {
  GraphInstance g = random_graph(12, 0.5, 77, 3);
  Oracle o(g, metered());
  auto v = OracleView::base(o);
  {
    PhaseScope scope(o.ledger(), "probe");
    for (Vertex x = 0; x < 12; ++x) v.cut(VertexSet{x});
  }
  v.pair_capacity(VertexSet{0, 1}, VertexSet{5, 6, 7});
  EXPECT_EQ(o.ledger().cut_count(), o.ledger().transcript().size());
  EXPECT_EQ(o.ledger().phase_counts().at("probe"), 12u);

  std::stringstream buf;
  o.ledger().write_transcript(buf);
  auto records = QueryLedger::read_transcript(buf);
  EXPECT_EQ(records, o.ledger().transcript());
  auto replay = replay_transcript(g, records);
  EXPECT_EQ(replay.mismatches, 0u);
  EXPECT_EQ(replay.ledger.transcript(), o.ledger().transcript());
  EXPECT_EQ(replay.ledger.cut_count(), o.ledger().cut_count());
  EXPECT_EQ(replay.ledger.phase_counts(), o.ledger().phase_counts());

  GraphInstance other = random_graph(12, 0.5, 78, 3);
  EXPECT_GT(replay_transcript(other, records).mismatches, 0u);
}

TEST(Views, AugmentedExamples) {
  GraphInstance B6 = b6();
  Oracle o(B6, metered());
  auto base = OracleView::base(o);
  const Terminal A[] = {{0, 2}};
  const Terminal B[] = {{5, 2}};
  auto v = OracleView::augmented(base, A, B);
  EXPECT_EQ(v.size(), 6 + 2 + 4);
  EXPECT_EQ(v.cut(VertexSet{v.source()}), 2);
  EXPECT_EQ(o.ledger().cut_count(), 0u);
  VertexSet S{v.source(), 0};
  for (Vertex h : v.terminal_paths()[0].hubs) S.push_back(h);
  EXPECT_EQ(v.cut(S), 2);
  EXPECT_EQ(o.ledger().cut_count(), 1u);

  auto empty = OracleView::augmented(base, {}, B);
  EXPECT_EQ(empty.cut(VertexSet{empty.source()}), 0);

  const Terminal dup[] = {{0, 1}, {0, 2}};
  EXPECT_THROW(OracleView::augmented(base, dup, B), InputError);
}

TEST(Views, ContractedExamples) {
  GraphInstance B6 = b6(), K4 = k4();
  Oracle a(B6, metered()), b(K4, metered());
  auto vb6 = OracleView::base(a);
  auto c1 = OracleView::contracted(vb6, VertexSet{0, 1, 2});
  const Vertex sr = c1.contracted_vertex();
  EXPECT_EQ(c1.pair_capacity(VertexSet{2}, VertexSet{sr}), 1);
  EXPECT_EQ(c1.pair_capacity(VertexSet{0}, VertexSet{sr}), 0);
  const auto before = a.ledger().cut_count();
  EXPECT_EQ(c1.cut(VertexSet{0, 1, 2}), 1);
  EXPECT_LE(a.ledger().cut_count() - before, 1u);

  auto vk4 = OracleView::base(b);
  auto c2 = OracleView::contracted(vk4, VertexSet{0, 1});
  EXPECT_EQ(c2.pair_capacity(VertexSet{0}, VertexSet{c2.contracted_vertex()}), 2);
  EXPECT_EQ(c2.pair_capacity(VertexSet{1}, VertexSet{c2.contracted_vertex()}), 2);
  EXPECT_EQ(c2.cut(VertexSet{0}), 3);
  EXPECT_THROW(OracleView::contracted(vk4, VertexSet{0, 1, 2, 3}), InputError);
  EXPECT_THROW(OracleView::contracted(vk4, VertexSet{}), InputError);
}

namespace {

// Expanded graphs built straight from the view definitions.
Matrix expand_augmented(const Matrix& g, std::span<const Terminal> A, std::span<const Terminal> B,
                        Capacity scale) {
  const std::size_t n = g.size();
  std::size_t total = n + 2;
  for (const auto& t : A) total += static_cast<std::size_t>(t.capacity);
  for (const auto& t : B) total += static_cast<std::size_t>(t.capacity);
  Matrix c(total, std::vector<Capacity>(total, 0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) c[u][v] = scale * g[u][v];
  std::size_t next = n + 2;
  for (const auto& t : A)
    for (Capacity j = 0; j < t.capacity; ++j, ++next) {
      c[n][next] = c[next][n] = 1;
      c[next][t.v] = c[t.v][next] = 1;
    }
  for (const auto& t : B)
    for (Capacity j = 0; j < t.capacity; ++j, ++next) {
      c[n + 1][next] = c[next][n + 1] = 1;
      c[next][t.v] = c[t.v][next] = 1;
    }
  return c;
}

Matrix expand_contracted(const Matrix& g, const VertexSet& keep) {
  const std::size_t k = keep.size();
  Matrix c(k + 1, std::vector<Capacity>(k + 1, 0));
  std::vector<std::size_t> id(g.size(), k);
  for (std::size_t i = 0; i < k; ++i) id[keep[i]] = i;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v)
      if (id[u] != id[v]) c[id[u]][id[v]] += g[u][v];
  return c;
}

void expect_view_matches(OracleView& v, const Matrix& want, std::mt19937_64& rng) {
  ASSERT_EQ(static_cast<std::size_t>(v.size()), want.size());
  const Vertex n = v.size();
  const bool full = n <= 16;
  const std::uint64_t limit = full ? (std::uint64_t{1} << n) : 4000;
  for (std::uint64_t i = 0; i < limit; ++i) {
    std::uint64_t mask = full ? i : rng() & ((std::uint64_t{1} << n) - 1);
    ASSERT_EQ(v.cut(bits_to_set(mask, n)), matrix_cut(want, mask)) << "mask " << mask;
  }
}

}  // namespace

TEST(Views, AugmentedMatchesExplicitExpansion) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Vertex n = 6 + trial % 5;
    GraphInstance g = random_graph(n, 0.5, 500 + trial, 1 + trial % 3);
    Oracle o(g, {.memoize = true});
    auto base = OracleView::base(o);
    std::vector<Terminal> A{{0, 1 + trial % 3}}, B{{static_cast<Vertex>(n - 1), 2}};
    if (trial % 2) A.push_back({1, 1});
    const Capacity scale = 1 + trial % 2;
    auto v = OracleView::augmented(base, A, B, scale);
    expect_view_matches(v, expand_augmented(capacity_matrix(g), A, B, scale), rng);
  }
}

TEST(Views, ContractedMatchesExplicitExpansion) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const Vertex n = 7 + trial % 6;
    GraphInstance g = random_graph(n, 0.5, 600 + trial, 1 + trial % 3);
    Oracle o(g, {.memoize = true});
    auto base = OracleView::base(o);
    VertexSet keep;
    for (Vertex x = 0; x < n; ++x)
      if (rng() % 2) keep.push_back(x);
    if (keep.empty() || keep.size() == static_cast<std::size_t>(n)) keep = {0, 1};
    auto v = OracleView::contracted(base, keep);
    expect_view_matches(v, expand_contracted(capacity_matrix(g), keep), rng);
  }
}

TEST(Views, DerivedViewsSubtractKnownEdges) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Vertex n = 8 + trial % 4;
    GraphInstance g = random_graph(n, 0.5, 700 + trial, 1 + trial % 2);
    Matrix c = capacity_matrix(g);
    Oracle o(g, {.memoize = true});
    auto base = OracleView::base(o);

    std::vector<Edge> removed;
    for (const auto& e : g.edges())
      if (rng() % 3 == 0) removed.push_back(e);
    auto cut = OracleView::without_edges(base, removed);
    Matrix c2 = c;
    for (const auto& e : removed) c2[e.u][e.v] = c2[e.v][e.u] = 0;
    expect_view_matches(cut, c2, rng);

    VertexSet keep;
    for (Vertex x = 0; x < n; ++x)
      if (rng() % 3) keep.push_back(x);
    if (keep.empty()) keep = {0};
    std::vector<Edge> boundary;
    for (const auto& e : g.edges())
      if (contains(keep, e.u) != contains(keep, e.v)) boundary.push_back(e);
    auto sub = OracleView::induced(base, keep, boundary);
    Matrix c3(keep.size(), std::vector<Capacity>(keep.size(), 0));
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) c3[i][j] = c[keep[i]][keep[j]];
    expect_view_matches(sub, c3, rng);
  }
}

TEST(Views, RemoveDirectEdgeCancelsCapacity) {
  GraphInstance K4 = k4();
  Oracle o(K4, metered());
  auto base = OracleView::base(o);
  auto v = OracleView::contracted(base, VertexSet{0, 1});
  const Vertex sr = v.contracted_vertex();
  EXPECT_EQ(v.remove_direct_edge(0, sr), 2);
  EXPECT_EQ(v.pair_capacity(VertexSet{0}, VertexSet{sr}), 0);
  EXPECT_EQ(v.cut(VertexSet{0}), 1);
}

TEST(Views, UnitCapacityLearningIsFree) {
  GraphInstance B6 = b6();
  Oracle o(B6, metered());
  auto v = OracleView::base(o);
  EXPECT_EQ(v.learn_capacity(2, 3), 1);
  EXPECT_EQ(o.ledger().cut_count(), 0u);
  EXPECT_EQ(v.known_capacity(3, 2), 1);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cutq/harness.hpp"
#include "cutq/maxflow.hpp"
#include "cutq/oracle.hpp"
#include "cutq/view.hpp"
#include "explicit.hpp"
#include "support.hpp"

using namespace cutq;
using namespace cutq::test;

namespace {

InstanceSpec spec(Family f, Vertex n, std::uint64_t seed = 0) {
  InstanceSpec s;
  s.family = f;
  s.n = n;
  s.seed = seed;
  return s;
}

}  // namespace

TEST(Generate, Examples) {
  EXPECT_EQ(generate(spec(Family::complete, 4)), k4());
  EXPECT_EQ(generate(spec(Family::two_cliques_bridge, 6)), b6());
  EXPECT_EQ(generate(spec(Family::two_cliques_bridge, 6)).m(), 7u);
  EXPECT_EQ(generate(spec(Family::path, 4)), p4());
  EXPECT_EQ(generate(spec(Family::star, 6)).degree(0), 5);

  auto planted = spec(Family::planted_cut, 30, 7);
  planted.planted = 2;
  const GraphInstance g = generate(planted);
  EXPECT_EQ(g.cut(iota_set(15)), 2);
  EXPECT_LE(reference_mincut(g).value, 2);
}

TEST(Generate, PureFunctionOfSpec) {
  for (Family f : all_families()) {
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      auto s = spec(f, 20, seed);
      s.planted = 3;
      s.max_w = seed == 99 ? 3 : 1;
      const GraphInstance a = generate(s), b = generate(s);
      EXPECT_EQ(a, b) << s.label();
      for (const Edge& e : a.edges()) EXPECT_LE(e.w, s.max_w);
    }
  }
  EXPECT_NE(generate(spec(Family::random_gnp, 20, 1)), generate(spec(Family::random_gnp, 20, 2)));
}

TEST(Generate, FamilyShapes) {
  const GraphInstance bar = generate(spec(Family::barbell, 12));
  EXPECT_EQ(bar.m(), 2u * 6 + 5);  // two K4 and a 5-edge handle through 4 path vertices
  const GraphInstance ex = generate(spec(Family::expander_like, 40, 3));
  for (Vertex v = 0; v < 40; ++v) {
    EXPECT_GE(ex.degree(v), 2);
    EXPECT_LE(ex.degree(v), 4);
  }
  EXPECT_EQ(family_named("barbell"), Family::barbell);
  EXPECT_STREQ(to_string(Family::planted_cut), "planted_cut");
}

TEST(Generate, RejectsBadParameters) {
  auto bar = spec(Family::barbell, 5);
  bar.clique = 3;
  EXPECT_THROW(generate(bar), InputError);
  auto pl = spec(Family::planted_cut, 4);
  pl.planted = 5;
  EXPECT_THROW(generate(pl), InputError);
  auto ex = spec(Family::expander_like, 4);
  ex.degree = 4;
  EXPECT_THROW(generate(ex), InputError);
  EXPECT_THROW(family_named("petersen"), InputError);
  EXPECT_THROW(algorithm_named("sort"), InputError);
}

TEST(Reference, Examples) {
  EXPECT_EQ(reference_mincut(b6()).value, 1);
  EXPECT_EQ(reference_mincut(b6()).side, (VertexSet{0, 1, 2}));
  EXPECT_EQ(reference_mincut(k4()).value, 3);
  EXPECT_EQ(reference_maxflow(b6(), 0, 5), 1);
  EXPECT_EQ(reference_maxflow(k4(), 0, 3), 3);
  EXPECT_EQ(stoer_wagner_mincut(b6()).value, 1);
  EXPECT_THROW(reference_maxflow(k4(), 1, 1), InputError);
}

TEST(Reference, MincutImplementationsAgree) {
  for (int trial = 0; trial < 120; ++trial) {
    const Vertex n = 2 + trial % 17;
    const GraphInstance g = random_graph(n, 0.2 + 0.05 * (trial % 10), 4000 + trial, 1 + trial % 3);
    const auto a = exhaustive_mincut(g), b = stoer_wagner_mincut(g);
    ASSERT_EQ(a.value, b.value) << "trial " << trial;
    EXPECT_EQ(g.cut(a.side), a.value);
    EXPECT_EQ(g.cut(b.side), b.value);
    EXPECT_FALSE(contains(b.side, n - 1));
    EXPECT_EQ(a.value, flow_mincut(capacity_matrix(g)));
  }
}

TEST(Reference, MaxflowAgreesWithDinitz) {
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 2 + trial % 14;
    const GraphInstance g = random_graph(n, 0.4, 5000 + trial, 1 + trial % 3);
    const Vertex s = trial % n, t = (s + 1 + trial / 7 % (n - 1)) % n;
    const Capacity ref = reference_maxflow(g, s, t);
    EXPECT_EQ(ref, explicit_maxflow(capacity_matrix(g), s, t));
    Oracle o(g);
    auto v = OracleView::base(o);
    EXPECT_EQ(dinitz_maxflow(v, s, t).value, ref) << "trial " << trial;
  }
}

TEST(Reference, SeparationCheck) {
  EXPECT_TRUE(separation_check(b6(), {0, 5}, 1));
  EXPECT_FALSE(separation_check(b6(), {0, 1}, 1));
  EXPECT_TRUE(separation_check(b6(), {0, 1}, 0));
  EXPECT_THROW(separation_check(complete(19), {0}, 1), InputError);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = 3 + trial % 10;
    const GraphInstance g = random_graph(n, 0.5, 6000 + trial);
    const VertexSet R = {0, n - 1};
    for (Capacity c = 0; c < 4; ++c) EXPECT_EQ(separation_check(g, R, c), separated(capacity_matrix(g), R, c));
  }
}

TEST(Reference, ExpandsExhaustive) {
  EXPECT_TRUE(expands_exhaustive(k4(), iota_set(4), iota_set(4), 2.0));
  EXPECT_FALSE(expands_exhaustive(k4(), iota_set(4), iota_set(4), 2.1));
  EXPECT_FALSE(expands_exhaustive(b6(), iota_set(6), {0, 5}, 1.5));
  EXPECT_TRUE(expands_exhaustive(b6(), iota_set(6), {0, 5}, 1.0));
}

TEST(Suite, B6Row) {
  const RowRun run = run_row(spec(Family::two_cliques_bridge, 6), Algorithm::mincut, desk_profile());
  EXPECT_EQ(run.row.answer, 1);
  EXPECT_EQ(run.row.reference_answer, 1);
  EXPECT_EQ(run.row.m, 7u);
  EXPECT_EQ(run.row.cut_queries, run.transcript.size());
  EXPECT_EQ(b6().cut(run.side), 1);
  EXPECT_EQ(replay_row(spec(Family::two_cliques_bridge, 6), Algorithm::mincut, desk_profile(), run.transcript), 1);
}

TEST(Suite, ReplayNeedsTheExactScript) {
  const auto s = spec(Family::random_gnp, 14, 5);
  auto run = run_row(s, Algorithm::maxflow, desk_profile());
  EXPECT_EQ(replay_row(s, Algorithm::maxflow, desk_profile(), run.transcript), run.row.answer);
  auto truncated = run.transcript;
  truncated.pop_back();
  EXPECT_THROW(replay_row(s, Algorithm::maxflow, desk_profile(), truncated), ContractViolation);
  auto padded = run.transcript;
  padded.push_back(padded.front());
  EXPECT_THROW(replay_row(s, Algorithm::maxflow, desk_profile(), padded), ContractViolation);
  auto wrong = run.transcript;
  wrong.front().set = {0, 1, 2};
  EXPECT_THROW(replay_row(s, Algorithm::maxflow, desk_profile(), wrong), ContractViolation);
}

TEST(Suite, CompleteGraphSlope) {
  std::vector<InstanceSpec> specs;
  for (Vertex n : {8, 16, 32, 64}) specs.push_back(spec(Family::complete, n));
  const auto res = run_suite(specs, {Algorithm::mincut}, desk_profile());
  ASSERT_EQ(res.scaling.size(), 1u);
  EXPECT_EQ(res.scaling[0].points, 4u);
  EXPECT_LT(res.scaling[0].slope, 2.0);
  for (const auto& r : res.rows) EXPECT_EQ(r.answer, r.n - 1);
}

TEST(Suite, DeterministicCsvAndTranscripts) {
  const auto dir = std::filesystem::temp_directory_path() / "cutq_suite_test";
  std::filesystem::remove_all(dir);
  std::vector<InstanceSpec> specs = {spec(Family::random_gnp, 12, 1), spec(Family::barbell, 10),
                                     spec(Family::expander_like, 16, 2)};
  std::string csv[2];
  std::string transcripts[2];
  for (int run = 0; run < 2; ++run) {
    SuiteOptions opts;
    opts.transcript_dir = dir / std::to_string(run);
    const auto res = run_suite(specs, {Algorithm::mincut, Algorithm::maxflow}, desk_profile(), opts);
    std::ostringstream out;
    write_csv(out, res.rows, false);
    csv[run] = out.str();
    for (const auto& s : specs) {
      for (Algorithm a : {Algorithm::mincut, Algorithm::maxflow}) {
        std::ifstream in(*opts.transcript_dir / transcript_filename(s, a));
        std::stringstream buf;
        buf << in.rdbuf();
        transcripts[run] += buf.str();
        in.clear();
        in.seekg(0);
        auto records = QueryLedger::read_transcript(in);
        const auto row = std::find_if(res.rows.begin(), res.rows.end(), [&](const ExperimentRow& r) {
          return r.family == to_string(s.family) && r.algorithm == to_string(a);
        });
        EXPECT_EQ(row->cut_queries, records.size());
        EXPECT_EQ(replay_transcript(generate(s), records).mismatches, 0u);
        EXPECT_EQ(replay_row(s, a, desk_profile(), records), row->answer);
      }
    }
  }
  EXPECT_EQ(csv[0], csv[1]);
  EXPECT_EQ(transcripts[0], transcripts[1]);
  EXPECT_FALSE(transcripts[0].empty());
  std::filesystem::remove_all(dir);
}

TEST(Suite, CsvSchema) {
  ExperimentRow r;
  r.family = "path";
  r.n = 3;
  r.m = 2;
  r.algorithm = "maxflow";
  r.answer = 1;
  r.cut_queries = 9;
  r.wall_ms = 1.5;
  r.profile = "desk";
  std::ostringstream out;
  write_csv(out, {r});
  EXPECT_EQ(out.str(),
            "family,n,m,seed,algorithm,answer,reference_answer,cut_queries,bis_queries,rounds,wall_ms,profile\n"
            "path,3,2,0,maxflow,1,,9,0,0,1.500,desk\n");
}

TEST(Suite, ScalingFit) {
  std::vector<ExperimentRow> rows;
  for (Vertex n : {10, 20, 40}) {
    ExperimentRow r;
    r.family = "f";
    r.algorithm = "a";
    r.n = n;
    r.cut_queries = static_cast<std::uint64_t>(n) * n;
    rows.push_back(r);
  }
  const auto fits = scaling_fits(rows);
  ASSERT_EQ(fits.size(), 1u);
  EXPECT_NEAR(fits[0].slope, 2.0, 1e-12);
}

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutq/common.hpp"
#include "cutq/config.hpp"
#include "cutq/exhaustive.hpp"
#include "cutq/graph.hpp"
#include "cutq/ledger.hpp"

namespace cutq {

enum class Family { random_gnp, barbell, two_cliques_bridge, path, star, complete, expander_like, planted_cut };

const char* to_string(Family f);
Family family_named(const std::string& name);
const std::vector<Family>& all_families();

// Zero-valued parameters take the family default: p = 0.5 for random_gnp and
// 0.8 (intra-half) for planted_cut, clique = n/3 for barbell, degree = 4 for
// expander_like.
struct InstanceSpec {
  Family family = Family::complete;
  Vertex n = 0;
  std::uint64_t seed = 0;
  double p = 0.0;
  Vertex clique = 0;
  int degree = 0;
  Capacity planted = 0;  // crossing edges of planted_cut
  Capacity max_w = 1;    // capacities drawn uniformly from [1, max_w]

  std::string label() const;
};

// Pure function of the spec.
GraphInstance generate(const InstanceSpec& spec);

DenseMatrix dense_matrix(const GraphInstance& g);

struct ReferenceCut {
  Capacity value = 0;
  VertexSet side;  // never contains n-1
};

// Reference oracles. They read the explicit graph and never touch a ledger.
ReferenceCut exhaustive_mincut(const GraphInstance& g);
ReferenceCut stoer_wagner_mincut(const GraphInstance& g);
// Exhaustive for n <= 18, Stoer-Wagner above.
ReferenceCut reference_mincut(const GraphInstance& g);
Capacity reference_maxflow(const GraphInstance& g, Vertex s, Vertex t);

inline constexpr Vertex kSeparationLimit = 18;

// Every cut of value <= c has R on both sides. n <= 18.
bool separation_check(const GraphInstance& g, const VertexSet& R, Capacity c);

// Every cut (S, part \ S) of G[part] has value >= factor * min(|S ∩ core|, |core \ S|).
bool expands_exhaustive(const GraphInstance& g, const VertexSet& part, const VertexSet& core, double factor);

enum class Algorithm { mincut, maxflow };

const char* to_string(Algorithm a);
Algorithm algorithm_named(const std::string& name);

struct ExperimentRow {
  std::string family;
  Vertex n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string algorithm;
  Capacity answer = 0;
  std::optional<Capacity> reference_answer;
  std::uint64_t cut_queries = 0;
  std::uint64_t bis_queries = 0;
  int rounds = 0;
  double wall_ms = 0.0;
  std::string profile;
};

struct RowRun {
  ExperimentRow row;
  VertexSet side;  // min-cut side, or source side for maxflow
  std::vector<TranscriptRecord> transcript;
};

// Max-flow rows route from 0 to n-1. Mincut rows need max_w == 1.
RowRun run_instance(const GraphInstance& g, Algorithm algo, const Config& cfg, bool with_reference = true);
RowRun run_row(const InstanceSpec& spec, Algorithm algo, const Config& cfg, bool with_reference = true);

// The answer an algorithm reaches when every query is answered from
// `transcript` rather than from the graph. Throws ContractViolation when the
// run diverges from the script or leaves records unused.
Capacity replay_row(const InstanceSpec& spec, Algorithm algo, const Config& cfg,
                    const std::vector<TranscriptRecord>& transcript);

struct SuiteOptions {
  bool with_reference = true;
  std::optional<std::filesystem::path> transcript_dir;
  std::filesystem::path diagnostic_dir = "cutq-diagnostics";
};

struct ScalingFit {
  std::string family;
  std::string algorithm;
  double slope = 0.0;
  std::size_t points = 0;
};

struct SuiteResult {
  std::vector<ExperimentRow> rows;
  std::vector<ScalingFit> scaling;
};

// A row whose answer differs from the reference. The instance and transcript
// were written to `bundle` before throwing.
class SuiteFailure : public std::runtime_error {
 public:
  SuiteFailure(const std::string& what, std::filesystem::path bundle)
      : std::runtime_error(what), bundle_(std::move(bundle)) {}
  const std::filesystem::path& bundle() const { return bundle_; }

 private:
  std::filesystem::path bundle_;
};

// Rows run in spec-major, algorithm-minor order with fresh oracles.
SuiteResult run_suite(const std::vector<InstanceSpec>& specs, const std::vector<Algorithm>& algos,
                      const Config& cfg, const SuiteOptions& opts = {});

// Least-squares slope of log(cut_queries) against log(n), per family and
// algorithm. Rows with zero queries are skipped.
std::vector<ScalingFit> scaling_fits(const std::vector<ExperimentRow>& rows);

std::string transcript_filename(const InstanceSpec& spec, Algorithm algo);

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows, bool with_wall = true);
void write_scaling(std::ostream& out, const std::vector<ScalingFit>& fits);

}  // namespace cutq

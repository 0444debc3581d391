#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cutq/common.hpp"
#include "cutq/config.hpp"
#include "cutq/expander.hpp"
#include "cutq/ledger.hpp"
#include "cutq/view.hpp"

namespace cutq {

struct SplitterFamily {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> sets;  // subsets of [0, n), each sorted, size >= 2
};

// Every S subset of [n] with 1 <= |S| <= k meets some set in exactly one
// element. Residue classes modulo small primes when that is certifiably
// enough, otherwise the star {0, x}.
SplitterFamily splitter_family(int n, int k);

struct FoundCut {
  Capacity value = 0;
  VertexSet side;
};

// One singleton cut query per vertex.
std::vector<Capacity> vertex_degrees(OracleView& view);

VertexSet dominating_set(OracleView& view, std::span<const Capacity> degrees);
VertexSet dominating_set(OracleView& view);

struct UnbalancedResult {
  std::optional<FoundCut> cut;
  int k = 0;
  bool exhaustive = false;  // k reaches floor(|R|/2): every cut splitting R is covered
  std::size_t family_size = 0;
  std::size_t sets_run = 0;
};

int unbalanced_k(const Config& cfg, Vertex n, std::size_t terminals);

UnbalancedResult unbalanced_case(OracleView& view, const VertexSet& R, Capacity tau, int k);

struct SparsifyResult {
  std::optional<FoundCut> cut;
  VertexSet sparsified;
  Decomposition decomposition;
};

SparsifyResult balanced_sparsify(OracleView& view, const VertexSet& R, Capacity tau, const Config& cfg);

enum class Certificate { degree_cut, isolating_cut, threshold_path, disconnected };
const char* to_string(Certificate c);

struct MincutContext {
  std::vector<Capacity> degrees;
  Capacity delta = 0;
  Vertex argmin = 0;
  VertexSet dominating;
};

MincutContext prepare_mincut(OracleView& view);

struct ThresholdResult {
  std::optional<FoundCut> cut;
  Certificate via = Certificate::degree_cut;
  int iterations = 0;
  bool fallback = false;
  std::vector<std::size_t> terminal_sizes;
};

// A cut of size <= tau, or nothing when the minimum cut exceeds tau.
ThresholdResult threshold_mincut(OracleView& view, Capacity tau, const Config& cfg, const MincutContext& ctx);
ThresholdResult threshold_mincut(OracleView& view, Capacity tau, const Config& cfg);

struct ProbeRecord {
  Capacity tau;
  bool found;
  Capacity value;
};

struct MinCutAnswer {
  Capacity value = 0;
  VertexSet side;
  Certificate certificate = Certificate::degree_cut;
  QueryLedger::Snapshot ledger;
  Capacity delta = 0;
  std::size_t dominating_size = 0;
  std::vector<ProbeRecord> probes;
};

MinCutAnswer global_mincut(OracleView& view, const Config& cfg = {});

}  // namespace cutq

#pragma once

#include <cstdint>
#include <vector>

#include "cutq/common.hpp"
#include "cutq/config.hpp"
#include "cutq/exhaustive.hpp"
#include "cutq/maxflow.hpp"
#include "cutq/view.hpp"

namespace cutq {

// Explicit cut-matching witness over terminal slots. An odd terminal count
// gets a phantom slot duplicating the highest terminal.
class WitnessGraph {
 public:
  WitnessGraph() = default;
  WitnessGraph(const VertexSet& terminals, Capacity b);

  int slots() const { return static_cast<int>(real_.size()); }
  Vertex terminal(int slot) const { return terminals_[static_cast<std::size_t>(slot)]; }
  int phantom() const { return phantom_; }
  Capacity b() const { return b_; }
  int round() const { return round_; }
  void next_round() { ++round_; }

  void add(int i, int j, Capacity units, bool is_fake);
  Capacity real(int i, int j) const { return real_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  Capacity fake(int i, int j) const { return fake_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  Capacity degree(int i) const;
  Capacity fake_degree(int i) const;
  Capacity fake_edge_count() const;

  const DenseMatrix& real_matrix() const { return real_; }
  DenseMatrix combined() const;

 private:
  VertexSet terminals_;
  int phantom_ = -1;
  Capacity b_ = 1;
  int round_ = 0;
  DenseMatrix real_, fake_;
};

struct Bisection {
  std::vector<int> A;  // slot indices
  std::vector<int> B;
};

// Sparsest cut of X extended to a bisection with the lowest free slots;
// exhaustive up to `exhaustive_max` slots, spectral above.
Bisection cut_player(const WitnessGraph& X, int exhaustive_max = 20);

// min over nonempty S with |S| <= slots/2 of E_X(S)/|S|, all edges counted.
double witness_sparsity(const WitnessGraph& X);

struct MatchEdge {
  Vertex a;
  Vertex b;
  Capacity units;
};

struct MatchingResult {
  bool sparse = false;
  VertexSet cut_side;           // S*, view ids
  std::vector<Edge> cut_edges;  // edges leaving S*, view capacities
  std::vector<MatchEdge> matching;
  std::vector<FlowPath> embedding;  // view ids, terminal to terminal
  Capacity flow_value = 0;
  Capacity internal = 1;
};

// internal = 0 uses ceil(1/phi) as the edge capacity. `doubled`, if set,
// occupies two slots on its side and demands 2(tau+1).
MatchingResult matching_player(OracleView& view, const VertexSet& A, const VertexSet& B, Capacity tau,
                               double phi, std::int64_t beta, Capacity internal = 0, Vertex doubled = -1);

struct PruneResult {
  std::vector<int> pruned;  // slot indices
  Capacity pruned_volume = 0;
  double volume_bound = 0;
  bool within_bound = true;
  int peels = 0;
};

// Peel low-conductance pieces off X minus its fake edges.
PruneResult prune(const WitnessGraph& X, double phi_x, int exhaustive_max = 18);

struct OneStepResult {
  enum class Kind { balanced_sparse_cut, core };
  Kind kind = Kind::core;
  VertexSet side;               // for a cut: S*, view ids
  std::vector<Edge> cut_edges;  // edges leaving S*
  VertexSet core;               // for a core: R'
  WitnessGraph witness;
  PruneResult pruning;
  int rounds = 0;
  Capacity internal = 1;
  bool certified = false;  // core expansion verified on the witness
};

OneStepResult one_step(OracleView& view, const VertexSet& R, Capacity tau, const Config& cfg);

enum class PartClass { empty, small, large };
const char* to_string(PartClass c);
PartClass classify(std::size_t core_size, double phi);

struct DecompositionPart {
  VertexSet V;
  VertexSet R;
  VertexSet core;
  PartClass cls = PartClass::empty;
  bool certified = false;
};

struct Decomposition {
  std::vector<DecompositionPart> parts;  // ordered by smallest vertex
  std::vector<Edge> crossing;            // view ids and capacities
  int depth = 0;
};

// `view` must carry no virtual edges.
Decomposition decompose(OracleView& view, const VertexSet& R, Capacity tau, const Config& cfg);

}  // namespace cutq

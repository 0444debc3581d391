#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cutq/common.hpp"
#include "cutq/flow.hpp"
#include "cutq/graph.hpp"
#include "cutq/oracle.hpp"

namespace cutq {

struct Terminal {
  Vertex v;
  Capacity capacity;
};

// The unit paths realizing one terminal edge of an augmented view.
struct TerminalPaths {
  Vertex terminal;
  bool source_side;
  std::vector<Vertex> hubs;
};

// A graph derived from the hidden graph whose cut answers cost at most one
// base query. View vertex x stands for the base vertices members(x); a
// vertex with no members is virtual. With B(S) the union of members,
//
//   Cut_view(S) = scale * (Cut_G(B(S)) - deleted edges leaving B(S))
//                 + virtual edges leaving S
//
// Virtual edges are signed so a known base edge can be cancelled.
class OracleView {
 public:
  enum class Kind { base, augmented, contracted, derived };
  using Row = std::vector<std::pair<Vertex, Capacity>>;

  static OracleView base(Oracle& oracle);
  // s_source/s_sink plus k unit paths per capacity-k terminal edge. The
  // parent's own edges are multiplied by `internal_scale`.
  static OracleView augmented(const OracleView& parent, std::span<const Terminal> A,
                              std::span<const Terminal> B, Capacity internal_scale = 1);
  // keep (renumbered 0..|keep|-1 in order) plus s_r carrying everything else.
  static OracleView contracted(const OracleView& parent, const VertexSet& keep);
  // Same vertices, listed edges (parent ids) logically removed.
  static OracleView without_edges(const OracleView& parent, std::span<const Edge> removed);
  // parent[keep], renumbered; `boundary` must list every parent edge leaving keep.
  static OracleView induced(const OracleView& parent, const VertexSet& keep,
                            std::span<const Edge> boundary);

  Kind kind() const { return kind_; }
  Vertex size() const { return size_; }
  VertexSet universe() const { return iota_set(size_); }
  Oracle& oracle() const { return *oracle_; }
  QueryLedger& ledger() const { return oracle_->ledger(); }
  Capacity scale() const { return scale_; }
  Vertex source() const { return source_; }
  Vertex sink() const { return sink_; }
  Vertex contracted_vertex() const { return contracted_; }

  const VertexSet& members(Vertex x) const { return members_[idx(x)]; }
  bool is_virtual(Vertex x) const { return members_[idx(x)].empty(); }
  // Base id when x stands for exactly one base vertex, else -1.
  Vertex base_id(Vertex x) const { return base_id_[idx(x)]; }
  // Id of x in the parent view, -1 if x was created by this view.
  Vertex origin(Vertex x) const { return origin_[idx(x)]; }
  VertexSet to_base(std::span<const Vertex> S) const;

  const Row& virtual_row(Vertex x) const { return virt_adj_[idx(x)]; }
  std::vector<Edge> virtual_edges() const;
  const std::vector<Edge>& deleted_edges() const { return deleted_; }
  const std::vector<TerminalPaths>& terminal_paths() const { return paths_; }

  // Metered operations. Sets need not be sorted; they are canonicalized.
  Capacity cut(std::span<const Vertex> S);
  Capacity pair_capacity(std::span<const Vertex> A, std::span<const Vertex> B);
  bool bis(std::span<const Vertex> A, std::span<const Vertex> B);
  bool residual_bis(const Flow& f, std::span<const Vertex> A, std::span<const Vertex> B);

  // Exact capacity c(x,y) when it is known without queries: a pair touching
  // a virtual vertex, or a pair learned here or by another view.
  std::optional<Capacity> known_capacity(Vertex x, Vertex y) const;
  const std::map<Vertex, Capacity>& learned_row(Vertex x) const { return known_[idx(x)]; }
  // Plain x: every y with known c(x,y) > 0, including shared knowledge.
  Row known_positive(Vertex x) const;
  // Records what a residual answer revealed about the plain pair (x,y).
  // Only pairs without flow, virtual or deleted capacity are informative.
  void note_residual(const Flow& f, Vertex x, Vertex y, bool positive);
  // Learns c(x,y). Caller must know that x and y are adjacent in the view.
  // Under the unit-capacity promise a plain adjacent pair costs nothing;
  // otherwise one pair_capacity on the singletons.
  Capacity learn_capacity(Vertex x, Vertex y);
  // Cancels the direct x-y capacity with a negative virtual edge.
  Capacity remove_direct_edge(Vertex x, Vertex y);

 private:
  OracleView() = default;
  std::size_t idx(Vertex x) const { return static_cast<std::size_t>(x); }
  void check_ids(std::span<const Vertex> S) const;
  void add_virtual(Vertex x, Vertex y, Capacity c);
  void add_deleted(Vertex bu, Vertex bv, Capacity w);
  void refresh_base_ids();
  bool deleted_pair(Vertex bu, Vertex bv) const;
  Capacity virtual_pair(Vertex x, Vertex y) const;
  bool all_virtual(std::span<const Vertex> S) const;
  Capacity virtual_between(std::span<const Vertex> A, std::span<const Vertex> B) const;
  // c(A,B) for canonical disjoint sets; exact when one side is all virtual.
  Capacity capacity_between(const VertexSet& A, const VertexSet& B, bool& charged);
  Capacity cut_canonical(const VertexSet& S);

  Oracle* oracle_ = nullptr;
  Kind kind_ = Kind::base;
  Vertex size_ = 0;
  Capacity scale_ = 1;
  Vertex source_ = -1;
  Vertex sink_ = -1;
  Vertex contracted_ = -1;
  std::vector<VertexSet> members_;
  std::vector<Vertex> base_id_;
  std::vector<Vertex> view_of_base_;  // plain view id per base vertex, or -1
  std::vector<Vertex> origin_;
  std::vector<Row> virt_adj_;
  std::vector<Edge> deleted_;  // base ids
  std::vector<Row> deleted_adj_;
  std::vector<std::map<Vertex, Capacity>> known_;
  std::vector<TerminalPaths> paths_;
  std::vector<char> mask_;
  std::vector<char> base_mask_;
};

}  // namespace cutq

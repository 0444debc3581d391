#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cutq/common.hpp"
#include "cutq/graph.hpp"
#include "cutq/ledger.hpp"

namespace cutq {

struct OracleOptions {
  // Remember answers so a repeated set is never charged twice.
  bool memoize = true;
  bool record_transcript = false;
};

// The only path from algorithms to the hidden graph. Every answered set is
// charged to the ledger unless it is empty, full, or a remembered repeat.
class Oracle {
 public:
  explicit Oracle(const GraphInstance& g, OracleOptions opts = {});
  // Answers from a recorded transcript instead of a graph. Every charged
  // query must match the next record's set, or ContractViolation is thrown.
  Oracle(Vertex n, Capacity max_capacity, std::vector<TranscriptRecord> script, OracleOptions opts = {});
  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  Vertex n() const { return n_; }
  // The promised upper bound W on capacities; public knowledge in the model.
  Capacity max_capacity() const { return max_w_; }
  bool scripted() const { return g_ == nullptr; }
  // Records of the script not yet consumed.
  std::size_t script_remaining() const { return script_.size() - next_; }

  // `sorted` must be strictly increasing ids in [0, n).
  Capacity cut(std::span<const Vertex> sorted);

  QueryLedger& ledger() { return ledger_; }
  const QueryLedger& ledger() const { return ledger_; }

  bool memoize() const { return memoize_; }
  void set_memoize(bool on);

  // Base-pair capacities deduced from earlier answers, shared by every view
  // of this oracle. Kept only while memoizing.
  std::optional<Capacity> learned(Vertex u, Vertex v) const;
  const std::vector<std::pair<Vertex, Capacity>>& learned_positive(Vertex u) const {
    return positive_[static_cast<std::size_t>(u)];
  }
  void record(Vertex u, Vertex v, Capacity c);

 private:
  std::string key_of(std::span<const Vertex> sorted) const;

  const GraphInstance* g_ = nullptr;
  Vertex n_ = 0;
  Capacity max_w_ = 1;
  std::vector<TranscriptRecord> script_;
  std::size_t next_ = 0;
  QueryLedger ledger_;
  bool memoize_;
  std::unordered_map<std::string, Capacity> memo_;
  std::unordered_map<std::uint64_t, Capacity> pairs_;
  std::vector<std::vector<std::pair<Vertex, Capacity>>> positive_;
};

struct ReplayResult {
  QueryLedger ledger;
  std::size_t mismatches = 0;
  std::size_t first_mismatch = 0;  // seq of the first bad record, 0 if none
};

// Re-asks every transcript record against `g` on a fresh recording ledger.
ReplayResult replay_transcript(const GraphInstance& g, const std::vector<TranscriptRecord>& records);

}  // namespace cutq

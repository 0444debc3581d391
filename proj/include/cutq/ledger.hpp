#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cutq/common.hpp"

namespace cutq {

struct TranscriptRecord {
  std::uint64_t seq = 0;
  VertexSet set;
  Capacity answer = 0;
  std::string tag;

  friend bool operator==(const TranscriptRecord&, const TranscriptRecord&) = default;
};

// Exact counters for every oracle interaction. `cut_count` is the measured
// query complexity; when recording is on it always equals transcript().size().
class QueryLedger {
 public:
  struct Snapshot {
    std::uint64_t cuts = 0;
    std::uint64_t bis = 0;
    std::uint64_t bis_shortcuts = 0;
    std::uint64_t free = 0;
    std::uint64_t memo_hits = 0;
  };

  std::uint64_t cut_count() const { return cuts_; }
  std::uint64_t bis_count() const { return bis_; }
  // BIS probes answered from already-known residual arcs; no oracle traffic.
  std::uint64_t bis_shortcut_count() const { return bis_shortcuts_; }
  // Empty/full-set queries: answered 0 and never charged.
  std::uint64_t free_count() const { return free_; }
  // Repeats answered from the oracle front-end's memory; never charged.
  std::uint64_t memo_hit_count() const { return memo_hits_; }

  Snapshot snapshot() const { return {cuts_, bis_, bis_shortcuts_, free_, memo_hits_}; }

  bool recording() const { return recording_; }
  void set_recording(bool on) { recording_ = on; }
  const std::vector<TranscriptRecord>& transcript() const { return transcript_; }

  const std::string& tag() const { return tag_; }
  void set_tag(std::string tag) { tag_ = std::move(tag); }
  // Charged cut queries per phase tag.
  const std::map<std::string, std::uint64_t>& phase_counts() const { return phases_; }

  void charge_cut(std::span<const Vertex> set, Capacity answer);
  void note_bis() { ++bis_; }
  void note_bis_shortcut() { ++bis_shortcuts_; }
  void note_free() { ++free_; }
  void note_memo_hit() { ++memo_hits_; }

  // One JSON object per line: {"answer":..,"seq":..,"set":[..],"tag":".."}.
  void write_transcript(std::ostream& out) const;
  static void write_records(std::ostream& out, const std::vector<TranscriptRecord>& records);
  static std::vector<TranscriptRecord> read_transcript(std::istream& in);

  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;

 private:
  std::uint64_t cuts_ = 0;
  std::uint64_t bis_ = 0;
  std::uint64_t bis_shortcuts_ = 0;
  std::uint64_t free_ = 0;
  std::uint64_t memo_hits_ = 0;
  bool recording_ = false;
  std::string tag_;
  std::vector<TranscriptRecord> transcript_;
  std::map<std::string, std::uint64_t> phases_;
};

// Tags every query charged while alive; restores the previous tag on exit.
class PhaseScope {
 public:
  PhaseScope(QueryLedger& ledger, std::string tag) : ledger_(ledger), prev_(ledger.tag()) {
    ledger_.set_tag(std::move(tag));
  }
  ~PhaseScope() { ledger_.set_tag(std::move(prev_)); }
  PhaseScope(const PhaseScope&) = delete;
  PhaseScope& operator=(const PhaseScope&) = delete;

 private:
  QueryLedger& ledger_;
  std::string prev_;
};

}  // namespace cutq

#include "cutq/oracle.hpp"

#include <algorithm>

namespace cutq {

namespace {

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) << 32 | static_cast<std::uint32_t>(v);
}

}  // namespace

Oracle::Oracle(const GraphInstance& g, OracleOptions opts)
    : g_(&g), n_(g.n()), max_w_(g.max_capacity()), memoize_(opts.memoize),
      positive_(static_cast<std::size_t>(g.n())) {
  ledger_.set_recording(opts.record_transcript);
}

Oracle::Oracle(Vertex n, Capacity max_capacity, std::vector<TranscriptRecord> script, OracleOptions opts)
    : n_(n), max_w_(max_capacity), script_(std::move(script)), memoize_(opts.memoize),
      positive_(static_cast<std::size_t>(n)) {
  require(n >= 1, "scripted oracle needs n >= 1");
  require(max_capacity >= 1, "capacity bound must be >= 1");
  ledger_.set_recording(opts.record_transcript);
}

void Oracle::set_memoize(bool on) {
  memoize_ = on;
  if (!on) {
    memo_.clear();
    pairs_.clear();
    for (auto& row : positive_) row.clear();
  }
}

std::optional<Capacity> Oracle::learned(Vertex u, Vertex v) const {
  if (auto it = pairs_.find(pair_key(u, v)); it != pairs_.end()) return it->second;
  return std::nullopt;
}

void Oracle::record(Vertex u, Vertex v, Capacity c) {
  if (!memoize_ || u == v) return;
  auto [it, fresh] = pairs_.emplace(pair_key(u, v), c);
  ensure(it->second == c, "conflicting capacities learned for one pair");
  if (fresh && c > 0) {
    positive_[static_cast<std::size_t>(u)].emplace_back(v, c);
    positive_[static_cast<std::size_t>(v)].emplace_back(u, c);
  }
}

// Bitset of whichever side excludes n-1, so S and its complement share a key.
std::string Oracle::key_of(std::span<const Vertex> sorted) const {
  const Vertex n = n_;
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::string key(words * 8, '\0');
  auto* bits = reinterpret_cast<unsigned char*>(key.data());
  for (Vertex v : sorted) bits[v / 8] |= static_cast<unsigned char>(1u << (v % 8));
  if (sorted.back() == n - 1) {
    for (Vertex v = 0; v < n; ++v) bits[v / 8] ^= static_cast<unsigned char>(1u << (v % 8));
  }
  return key;
}

Capacity Oracle::cut(std::span<const Vertex> sorted) {
  const Vertex n = n_;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    require(sorted[i] >= 0 && sorted[i] < n, "query id out of range: " + std::to_string(sorted[i]));
    require(i == 0 || sorted[i - 1] < sorted[i], "query set is not canonical");
  }
  if (sorted.empty() || sorted.size() == static_cast<std::size_t>(n)) {
    ledger_.note_free();
    return 0;
  }
  std::string key;
  if (memoize_) {
    key = key_of(sorted);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ledger_.note_memo_hit();
      return it->second;
    }
  }
  Capacity answer;
  if (g_) {
    answer = g_->cut(sorted);
  } else {
    ensure(next_ < script_.size(), "script exhausted at query " + std::to_string(next_ + 1));
    const auto& rec = script_[next_++];
    ensure(std::equal(rec.set.begin(), rec.set.end(), sorted.begin(), sorted.end()),
           "query " + std::to_string(rec.seq) + " diverges from the script");
    answer = rec.answer;
  }
  ledger_.charge_cut(sorted, answer);
  if (memoize_) memo_.emplace(std::move(key), answer);
  return answer;
}

ReplayResult replay_transcript(const GraphInstance& g, const std::vector<TranscriptRecord>& records) {
  Oracle oracle(g, {.memoize = false, .record_transcript = true});
  ReplayResult out;
  for (const auto& r : records) {
    oracle.ledger().set_tag(r.tag);
    if (oracle.cut(r.set) != r.answer) {
      if (out.mismatches++ == 0) out.first_mismatch = r.seq;
    }
  }
  oracle.ledger().set_tag("");
  out.ledger = oracle.ledger();
  return out;
}

}  // namespace cutq

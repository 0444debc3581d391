#include "cutq/ledger.hpp"

#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

namespace cutq {

void QueryLedger::charge_cut(std::span<const Vertex> set, Capacity answer) {
  ++cuts_;
  ++phases_[tag_];
  if (recording_)
    transcript_.push_back({cuts_, VertexSet(set.begin(), set.end()), answer, tag_});
}

void QueryLedger::write_transcript(std::ostream& out) const { write_records(out, transcript_); }

void QueryLedger::write_records(std::ostream& out, const std::vector<TranscriptRecord>& records) {
  for (const auto& r : records) {
    nlohmann::json j = {{"seq", r.seq}, {"set", r.set}, {"answer", r.answer}, {"tag", r.tag}};
    out << j.dump() << '\n';
  }
}

std::vector<TranscriptRecord> QueryLedger::read_transcript(std::istream& in) {
  std::vector<TranscriptRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      out.push_back({j.at("seq").get<std::uint64_t>(), j.at("set").get<VertexSet>(),
                     j.at("answer").get<Capacity>(), j.at("tag").get<std::string>()});
    } catch (const nlohmann::json::exception& e) {
      throw InputError("bad transcript line: " + std::string(e.what()));
    }
  }
  return out;
}

}  // namespace cutq

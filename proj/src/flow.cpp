#include "cutq/flow.hpp"

namespace cutq {

Flow::Flow(Vertex size, Vertex source, Vertex sink) : s_(source), t_(sink) {
  require(size >= 0, "flow size must be non-negative");
  require(source >= 0 && source < size && sink >= 0 && sink < size, "flow terminal out of range");
  rows_.resize(static_cast<std::size_t>(size));
}

Capacity Flow::at(Vertex u, Vertex v) const {
  const auto& r = rows_[static_cast<std::size_t>(u)];
  auto it = r.find(v);
  return it == r.end() ? 0 : it->second;
}

void Flow::push(Vertex u, Vertex v, Capacity amount) {
  ensure(u != v, "flow on a self-pair");
  if (amount == 0) return;
  auto bump = [](std::map<Vertex, Capacity>& row, Vertex key, Capacity d) {
    auto [it, fresh] = row.try_emplace(key, 0);
    it->second = checked_add(it->second, d);
    if (it->second == 0) row.erase(it);
  };
  bump(rows_[static_cast<std::size_t>(u)], v, amount);
  bump(rows_[static_cast<std::size_t>(v)], u, -amount);
}

void Flow::add(const Flow& other) {
  ensure(other.size() == size(), "flow size mismatch");
  for (Vertex u = 0; u < size(); ++u)
    for (const auto& [v, x] : other.row(u))
      if (u < v) push(u, v, x);
}

Capacity Flow::net_out(Vertex u) const {
  Capacity total = 0;
  for (const auto& [v, x] : rows_[static_cast<std::size_t>(u)]) total = checked_add(total, x);
  return total;
}

Capacity Flow::sum_between(std::span<const Vertex> A, std::span<const Vertex> B) const {
  Capacity total = 0;
  for (Vertex a : A)
    for (const auto& [b, x] : rows_[static_cast<std::size_t>(a)])
      if (contains(B, b)) total = checked_add(total, x);
  return total;
}

bool Flow::empty() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

bool Flow::conserves() const {
  for (Vertex u = 0; u < size(); ++u) {
    if (u == s_ || u == t_) continue;
    if (net_out(u) != 0) return false;
  }
  return true;
}

}  // namespace cutq

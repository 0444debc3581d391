#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutq {

using Vertex = std::int32_t;
using Capacity = std::int64_t;

// Sorted, duplicate-free list of vertex ids. Every set that crosses a module
// boundary is kept in this canonical form so transcripts are byte-stable.
using VertexSet = std::vector<Vertex>;

inline constexpr Capacity kInfinity = INT64_MAX;

// Caller supplied malformed input (bad ids, overlapping sets, bad files).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant was broken (invalid flow, overflow, inconsistent
// layered graph). Indicates a bug, not bad input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

inline VertexSet canonical(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

inline VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool disjoint(std::span<const Vertex> a, std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

inline VertexSet iota_set(Vertex n) {
  VertexSet s(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = i;
  return s;
}

inline Capacity checked_add(Capacity a, Capacity b) {
  Capacity r;
  ensure(!__builtin_add_overflow(a, b, &r), "capacity overflow");
  return r;
}

inline Capacity checked_mul(Capacity a, Capacity b) {
  Capacity r;
  ensure(!__builtin_mul_overflow(a, b, &r), "capacity overflow");
  return r;
}

}  // namespace cutq

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "cutq/common.hpp"

namespace cutq {

using DenseMatrix = std::vector<std::vector<Capacity>>;

inline constexpr int kExhaustiveLimit = 22;

// Cut value of every subset of an explicit symmetric weight matrix, indexed
// by bitmask. Zero queries; only for small explicit graphs.
inline std::vector<Capacity> all_cut_values(const DenseMatrix& w) {
  const int m = static_cast<int>(w.size());
  require(m <= kExhaustiveLimit, "too many vertices for exhaustive enumeration");
  std::vector<Capacity> deg(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) deg[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  std::vector<Capacity> cut(std::size_t{1} << m, 0);
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    const auto& row = w[static_cast<std::size_t>(low)];
    Capacity inside = 0;
    for (std::uint32_t r = rest; r; r &= r - 1) inside += row[static_cast<std::size_t>(std::countr_zero(r))];
    cut[mask] = cut[rest] + deg[static_cast<std::size_t>(low)] - 2 * inside;
  }
  return cut;
}

}  // namespace cutq

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cutq/common.hpp"

namespace cutq {

struct Edge {
  Vertex u;
  Vertex v;
  Capacity w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// The hidden simple capacitated graph. Algorithms only ever see it through an
// Oracle; the harness and reference oracles read it directly.
class GraphInstance {
 public:
  GraphInstance() = default;
  explicit GraphInstance(Vertex n);

  // Rejects self-loops, duplicate pairs, out-of-range ids and w < 1.
  void add_edge(Vertex u, Vertex v, Capacity w = 1);

  Vertex n() const { return n_; }
  std::size_t m() const { return edge_count_; }
  Capacity max_capacity() const { return max_w_; }

  Capacity capacity(Vertex u, Vertex v) const;
  const std::vector<std::pair<Vertex, Capacity>>& neighbors(Vertex u) const {
    return adj_[static_cast<std::size_t>(u)];
  }
  Capacity degree(Vertex u) const;

  // Ground-truth cut value, no accounting. `sorted` must be canonical.
  Capacity cut(std::span<const Vertex> sorted) const;

  // Edges with u < v, sorted.
  std::vector<Edge> edges() const;

  // `n m` header then `u v [w]` lines.
  static GraphInstance parse(std::istream& in);
  static GraphInstance load(const std::string& path);
  void write(std::ostream& out) const;
  void save(const std::string& path) const;

  friend bool operator==(const GraphInstance& a, const GraphInstance& b) {
    return a.n_ == b.n_ && a.edges() == b.edges();
  }

 private:
  std::size_t words() const { return (static_cast<std::size_t>(n_) + 63) / 64; }

  Vertex n_ = 0;
  std::size_t edge_count_ = 0;
  Capacity max_w_ = 1;
  std::vector<std::vector<std::pair<Vertex, Capacity>>> adj_;
  // Row-major adjacency bitsets; used for the unit-capacity fast path.
  std::vector<std::uint64_t> bits_;
};

}  // namespace cutq

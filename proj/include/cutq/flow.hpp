#pragma once

#include <map>
#include <span>
#include <vector>

#include "cutq/common.hpp"

namespace cutq {

// Antisymmetric integral flow: every stored f(u,v) has a mirrored -f(u,v).
// Zero entries are erased, so rows list exactly the support.
class Flow {
 public:
  Flow() = default;
  Flow(Vertex size, Vertex source, Vertex sink);

  Vertex size() const { return static_cast<Vertex>(rows_.size()); }
  Vertex source() const { return s_; }
  Vertex sink() const { return t_; }

  Capacity at(Vertex u, Vertex v) const;
  // f(u,v) += amount and f(v,u) -= amount.
  void push(Vertex u, Vertex v, Capacity amount);
  void add(const Flow& other);

  Capacity net_out(Vertex u) const;
  Capacity value() const { return net_out(s_); }
  // Σ f(a,b) over a∈A, b∈B. Both sets sorted.
  Capacity sum_between(std::span<const Vertex> A, std::span<const Vertex> B) const;

  const std::map<Vertex, Capacity>& row(Vertex u) const { return rows_[static_cast<std::size_t>(u)]; }
  bool empty() const;
  bool conserves() const;

  friend bool operator==(const Flow&, const Flow&) = default;

 private:
  Vertex s_ = -1;
  Vertex t_ = -1;
  std::vector<std::map<Vertex, Capacity>> rows_;
};

}  // namespace cutq

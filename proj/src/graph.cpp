#include "cutq/graph.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cutq {

GraphInstance::GraphInstance(Vertex n) : n_(n) {
  require(n >= 0, "vertex count must be non-negative");
  adj_.resize(static_cast<std::size_t>(n));
  bits_.assign(static_cast<std::size_t>(n) * words(), 0);
}

void GraphInstance::add_edge(Vertex u, Vertex v, Capacity w) {
  require(u >= 0 && u < n_ && v >= 0 && v < n_,
          "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  require(u != v, "self-loop on vertex " + std::to_string(u));
  require(w >= 1, "capacity must be an integer >= 1");
  const std::size_t W = words();
  auto& word = bits_[static_cast<std::size_t>(u) * W + static_cast<std::size_t>(v) / 64];
  const std::uint64_t mask = std::uint64_t{1} << (v % 64);
  require(!(word & mask), "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  word |= mask;
  bits_[static_cast<std::size_t>(v) * W + static_cast<std::size_t>(u) / 64] |=
      std::uint64_t{1} << (u % 64);
  adj_[static_cast<std::size_t>(u)].emplace_back(v, w);
  adj_[static_cast<std::size_t>(v)].emplace_back(u, w);
  ++edge_count_;
  max_w_ = std::max(max_w_, w);
}

Capacity GraphInstance::capacity(Vertex u, Vertex v) const {
  for (const auto& [x, w] : adj_[static_cast<std::size_t>(u)])
    if (x == v) return w;
  return 0;
}

Capacity GraphInstance::degree(Vertex u) const {
  Capacity d = 0;
  for (const auto& [x, w] : adj_[static_cast<std::size_t>(u)]) d += w;
  return d;
}

Capacity GraphInstance::cut(std::span<const Vertex> sorted) const {
  if (sorted.empty()) return 0;
  const std::size_t W = words();
  std::vector<std::uint64_t> in(W, 0);
  for (Vertex v : sorted) in[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  Capacity total = 0;
  if (max_w_ == 1) {
    for (Vertex u : sorted) {
      const std::uint64_t* row = &bits_[static_cast<std::size_t>(u) * W];
      for (std::size_t k = 0; k < W; ++k) total += std::popcount(row[k] & ~in[k]);
    }
    return total;
  }
  for (Vertex u : sorted)
    for (const auto& [v, w] : adj_[static_cast<std::size_t>(u)])
      if (!(in[static_cast<std::size_t>(v) / 64] >> (v % 64) & 1)) total = checked_add(total, w);
  return total;
}

std::vector<Edge> GraphInstance::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (const auto& [v, w] : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.push_back({u, v, w});
  std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  return out;
}

GraphInstance GraphInstance::parse(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      auto pos = out.find_first_not_of(" \t\r");
      if (pos != std::string::npos && out[pos] != '#') return true;
    }
    return false;
  };
  require(next_line(line), "graph file is empty");
  std::istringstream head(line);
  long long n = -1, m = -1;
  require(static_cast<bool>(head >> n >> m) && n >= 0 && m >= 0, "bad header line: " + line);
  GraphInstance g(static_cast<Vertex>(n));
  for (long long i = 0; i < m; ++i) {
    require(next_line(line), "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
    std::istringstream row(line);
    long long u, v, w = 1;
    require(static_cast<bool>(row >> u >> v), "bad edge line: " + line);
    if (!(row >> w)) w = 1;
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
  }
  return g;
}

GraphInstance GraphInstance::load(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open graph file " + path);
  return parse(in);
}

void GraphInstance::write(std::ostream& out) const {
  out << n_ << ' ' << edge_count_ << '\n';
  for (const auto& e : edges()) {
    out << e.u << ' ' << e.v;
    if (e.w != 1) out << ' ' << e.w;
    out << '\n';
  }
}

void GraphInstance::save(const std::string& path) const {
  std::ofstream out(path);
  require(out.good(), "cannot write graph file " + path);
  write(out);
}

}  // namespace cutq

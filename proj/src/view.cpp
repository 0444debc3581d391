#include "cutq/view.hpp"

#include <array>
#include <set>

namespace cutq {

namespace {

VertexSet canonical_span(std::span<const Vertex> S) {
  if (std::is_sorted(S.begin(), S.end()) && std::adjacent_find(S.begin(), S.end()) == S.end())
    return VertexSet(S.begin(), S.end());
  return canonical(VertexSet(S.begin(), S.end()));
}

}  // namespace

OracleView OracleView::base(Oracle& oracle) {
  OracleView v;
  v.oracle_ = &oracle;
  v.kind_ = Kind::base;
  v.size_ = oracle.n();
  const auto n = static_cast<std::size_t>(v.size_);
  v.members_.resize(n);
  v.origin_.resize(n);
  for (Vertex x = 0; x < v.size_; ++x) {
    v.members_[static_cast<std::size_t>(x)] = {x};
    v.origin_[static_cast<std::size_t>(x)] = x;
  }
  v.virt_adj_.resize(n);
  v.known_.resize(n);
  v.mask_.assign(n, 0);
  v.base_mask_.assign(n, 0);
  v.refresh_base_ids();
  return v;
}

OracleView OracleView::augmented(const OracleView& parent, std::span<const Terminal> A,
                                 std::span<const Terminal> B, Capacity internal_scale) {
  require(internal_scale >= 1, "internal scale must be >= 1");
  std::set<Vertex> seen_a, seen_b;
  for (const auto& t : A) {
    require(t.v >= 0 && t.v < parent.size_, "terminal out of range: " + std::to_string(t.v));
    require(t.capacity >= 1, "terminal capacity must be >= 1");
    require(seen_a.insert(t.v).second, "duplicate terminal " + std::to_string(t.v));
  }
  for (const auto& t : B) {
    require(t.v >= 0 && t.v < parent.size_, "terminal out of range: " + std::to_string(t.v));
    require(t.capacity >= 1, "terminal capacity must be >= 1");
    require(seen_b.insert(t.v).second && !seen_a.count(t.v),
            "duplicate terminal " + std::to_string(t.v));
  }

  OracleView v = parent;
  v.kind_ = Kind::augmented;
  v.scale_ = checked_mul(parent.scale_, internal_scale);
  for (auto& row : v.virt_adj_)
    for (auto& e : row) e.second = checked_mul(e.second, internal_scale);
  for (auto& row : v.known_)
    for (auto& e : row) e.second = checked_mul(e.second, internal_scale);
  for (Vertex x = 0; x < v.size_; ++x) v.origin_[static_cast<std::size_t>(x)] = x;
  v.paths_.clear();

  auto fresh = [&v]() {
    const Vertex id = v.size_++;
    v.members_.emplace_back();
    v.origin_.push_back(-1);
    v.virt_adj_.emplace_back();
    v.known_.emplace_back();
    return id;
  };
  v.source_ = fresh();
  v.sink_ = fresh();
  for (const auto& t : A) {
    TerminalPaths p{t.v, true, {}};
    for (Capacity j = 0; j < t.capacity; ++j) {
      const Vertex h = fresh();
      v.add_virtual(v.source_, h, 1);
      v.add_virtual(h, t.v, 1);
      p.hubs.push_back(h);
    }
    v.paths_.push_back(std::move(p));
  }
  for (const auto& t : B) {
    TerminalPaths p{t.v, false, {}};
    for (Capacity j = 0; j < t.capacity; ++j) {
      const Vertex h = fresh();
      v.add_virtual(t.v, h, 1);
      v.add_virtual(h, v.sink_, 1);
      p.hubs.push_back(h);
    }
    v.paths_.push_back(std::move(p));
  }
  v.mask_.assign(static_cast<std::size_t>(v.size_), 0);
  v.refresh_base_ids();
  return v;
}

OracleView OracleView::contracted(const OracleView& parent, const VertexSet& keep_in) {
  const VertexSet keep = canonical(keep_in);
  parent.check_ids(keep);
  require(!keep.empty(), "contracted view needs a nonempty keep set");
  require(keep.size() < static_cast<std::size_t>(parent.size_), "keep must be a proper subset");
  for (Vertex x = 0; x < parent.size_; ++x)
    require(!parent.is_virtual(x) && parent.virtual_row(x).empty(),
            "contraction requires a parent without virtual structure");

  OracleView v;
  v.oracle_ = parent.oracle_;
  v.kind_ = Kind::contracted;
  v.scale_ = parent.scale_;
  v.size_ = static_cast<Vertex>(keep.size()) + 1;
  const auto size = static_cast<std::size_t>(v.size_);
  v.members_.resize(size);
  v.origin_.assign(size, -1);
  std::vector<Vertex> renum(static_cast<std::size_t>(parent.size_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    v.members_[i] = parent.members(keep[i]);
    v.origin_[i] = keep[i];
    renum[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  }
  VertexSet rest;
  for (Vertex x = 0; x < parent.size_; ++x)
    if (renum[static_cast<std::size_t>(x)] < 0) {
      const auto& m = parent.members(x);
      rest.insert(rest.end(), m.begin(), m.end());
    }
  std::sort(rest.begin(), rest.end());
  v.contracted_ = static_cast<Vertex>(keep.size());
  v.members_[keep.size()] = std::move(rest);
  v.virt_adj_.resize(size);
  v.known_.resize(size);
  for (Vertex x : keep)
    for (const auto& [y, c] : parent.known_[static_cast<std::size_t>(x)])
      if (renum[static_cast<std::size_t>(y)] >= 0)
        v.known_[static_cast<std::size_t>(renum[static_cast<std::size_t>(x)])]
                [renum[static_cast<std::size_t>(y)]] = c;
  v.deleted_ = parent.deleted_;
  v.deleted_adj_ = parent.deleted_adj_;
  v.mask_.assign(size, 0);
  v.base_mask_.assign(static_cast<std::size_t>(v.oracle_->n()), 0);
  v.refresh_base_ids();
  return v;
}

OracleView OracleView::without_edges(const OracleView& parent, std::span<const Edge> removed) {
  OracleView v = parent;
  v.kind_ = Kind::derived;
  for (Vertex x = 0; x < v.size_; ++x) v.origin_[static_cast<std::size_t>(x)] = x;
  v.paths_.clear();
  for (const auto& e : removed) {
    parent.check_ids(std::array{e.u, e.v});
    const Vertex bu = parent.base_id(e.u), bv = parent.base_id(e.v);
    require(bu >= 0 && bv >= 0, "removed edges must join plain vertices");
    require(e.w % parent.scale_ == 0, "removed capacity is not a multiple of the view scale");
    v.add_deleted(bu, bv, e.w / parent.scale_);
    v.known_[static_cast<std::size_t>(e.u)][e.v] = 0;
    v.known_[static_cast<std::size_t>(e.v)][e.u] = 0;
  }
  return v;
}

OracleView OracleView::induced(const OracleView& parent, const VertexSet& keep_in,
                               std::span<const Edge> boundary) {
  const VertexSet keep = canonical(keep_in);
  parent.check_ids(keep);
  require(!keep.empty(), "induced view needs a nonempty vertex set");
  for (Vertex x = 0; x < parent.size_; ++x)
    require(parent.virtual_row(x).empty(), "induced views require a parent without virtual edges");

  OracleView v;
  v.oracle_ = parent.oracle_;
  v.kind_ = Kind::derived;
  v.scale_ = parent.scale_;
  v.size_ = static_cast<Vertex>(keep.size());
  const auto size = keep.size();
  v.members_.resize(size);
  v.origin_.resize(size);
  std::vector<Vertex> renum(static_cast<std::size_t>(parent.size_), -1);
  for (std::size_t i = 0; i < size; ++i) {
    v.members_[i] = parent.members(keep[i]);
    v.origin_[i] = keep[i];
    renum[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  }
  v.virt_adj_.resize(size);
  v.known_.resize(size);
  for (Vertex x : keep)
    for (const auto& [y, c] : parent.known_[static_cast<std::size_t>(x)])
      if (renum[static_cast<std::size_t>(y)] >= 0)
        v.known_[static_cast<std::size_t>(renum[static_cast<std::size_t>(x)])]
                [renum[static_cast<std::size_t>(y)]] = c;
  v.deleted_ = parent.deleted_;
  v.deleted_adj_ = parent.deleted_adj_;
  for (const auto& e : boundary) {
    parent.check_ids(std::array{e.u, e.v});
    const bool in_u = renum[static_cast<std::size_t>(e.u)] >= 0;
    const bool in_v = renum[static_cast<std::size_t>(e.v)] >= 0;
    require(in_u != in_v, "boundary edge must have exactly one endpoint inside");
    const Vertex bu = parent.base_id(e.u), bv = parent.base_id(e.v);
    require(bu >= 0 && bv >= 0, "boundary edges must join plain vertices");
    require(e.w % parent.scale_ == 0, "boundary capacity is not a multiple of the view scale");
    v.add_deleted(bu, bv, e.w / parent.scale_);
  }
  v.mask_.assign(size, 0);
  v.base_mask_.assign(static_cast<std::size_t>(v.oracle_->n()), 0);
  v.refresh_base_ids();
  return v;
}

void OracleView::check_ids(std::span<const Vertex> S) const {
  for (Vertex x : S)
    require(x >= 0 && x < size_, "view id out of range: " + std::to_string(x));
}

void OracleView::add_virtual(Vertex x, Vertex y, Capacity c) {
  virt_adj_[idx(x)].emplace_back(y, c);
  virt_adj_[idx(y)].emplace_back(x, c);
}

void OracleView::add_deleted(Vertex bu, Vertex bv, Capacity w) {
  if (deleted_adj_.empty()) deleted_adj_.resize(static_cast<std::size_t>(oracle_->n()));
  if (base_mask_.empty()) base_mask_.assign(static_cast<std::size_t>(oracle_->n()), 0);
  for (const auto& [y, c] : deleted_adj_[static_cast<std::size_t>(bu)])
    if (y == bv) return;
  deleted_.push_back({std::min(bu, bv), std::max(bu, bv), w});
  deleted_adj_[static_cast<std::size_t>(bu)].emplace_back(bv, w);
  deleted_adj_[static_cast<std::size_t>(bv)].emplace_back(bu, w);
}

void OracleView::refresh_base_ids() {
  base_id_.resize(members_.size());
  view_of_base_.assign(static_cast<std::size_t>(oracle_->n()), -1);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    base_id_[i] = members_[i].size() == 1 ? members_[i][0] : -1;
    if (base_id_[i] >= 0) view_of_base_[static_cast<std::size_t>(base_id_[i])] = static_cast<Vertex>(i);
  }
}

bool OracleView::deleted_pair(Vertex bu, Vertex bv) const {
  if (deleted_adj_.empty()) return false;
  for (const auto& [z, w] : deleted_adj_[static_cast<std::size_t>(bu)])
    if (z == bv) return true;
  return false;
}

Capacity OracleView::virtual_pair(Vertex x, Vertex y) const {
  Capacity total = 0;
  for (const auto& [z, c] : virt_adj_[idx(x)])
    if (z == y) total += c;
  return total;
}

VertexSet OracleView::to_base(std::span<const Vertex> S) const {
  VertexSet out;
  for (Vertex x : S) {
    const auto& m = members_[idx(x)];
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> OracleView::virtual_edges() const {
  std::vector<Edge> out;
  for (Vertex x = 0; x < size_; ++x)
    for (const auto& [y, c] : virt_adj_[idx(x)])
      if (x < y) out.push_back({x, y, c});
  return out;
}

bool OracleView::all_virtual(std::span<const Vertex> S) const {
  for (Vertex x : S)
    if (!members_[idx(x)].empty()) return false;
  return true;
}

Capacity OracleView::virtual_between(std::span<const Vertex> A, std::span<const Vertex> B) const {
  Capacity total = 0;
  for (Vertex a : A)
    for (const auto& [y, c] : virt_adj_[idx(a)])
      if (contains(B, y)) total = checked_add(total, c);
  return total;
}

Capacity OracleView::cut_canonical(const VertexSet& S) {
  if (S.empty() || S.size() == static_cast<std::size_t>(size_)) {
    ledger().note_free();
    return 0;
  }
  VertexSet base;
  for (Vertex x : S) {
    const auto& m = members_[idx(x)];
    base.insert(base.end(), m.begin(), m.end());
  }
  Capacity total = 0;
  if (!base.empty()) {
    std::sort(base.begin(), base.end());
    Capacity b = oracle_->cut(base);
    if (!deleted_.empty()) {
      for (Vertex u : base) base_mask_[static_cast<std::size_t>(u)] = 1;
      for (Vertex u : base)
        for (const auto& [w, c] : deleted_adj_[static_cast<std::size_t>(u)])
          if (!base_mask_[static_cast<std::size_t>(w)]) b -= c;
      for (Vertex u : base) base_mask_[static_cast<std::size_t>(u)] = 0;
    }
    ensure(b >= 0, "deleted edges exceed the base cut");
    total = checked_mul(scale_, b);
  }
  for (Vertex x : S) mask_[idx(x)] = 1;
  for (Vertex x : S)
    for (const auto& [y, c] : virt_adj_[idx(x)])
      if (!mask_[idx(y)]) total = checked_add(total, c);
  for (Vertex x : S) mask_[idx(x)] = 0;
  ensure(total >= 0, "negative view cut");
  return total;
}

Capacity OracleView::cut(std::span<const Vertex> S) {
  check_ids(S);
  return cut_canonical(canonical_span(S));
}

Capacity OracleView::capacity_between(const VertexSet& A, const VertexSet& B, bool& charged) {
  if (all_virtual(A) || all_virtual(B)) {
    charged = false;
    return virtual_between(A, B);
  }
  charged = true;
  const Capacity twice = cut_canonical(A) + cut_canonical(B) - cut_canonical(set_union(A, B));
  ensure(twice >= 0 && twice % 2 == 0, "inconsistent cut answers");
  return twice / 2;
}

Capacity OracleView::pair_capacity(std::span<const Vertex> A_in, std::span<const Vertex> B_in) {
  check_ids(A_in);
  check_ids(B_in);
  const VertexSet A = canonical_span(A_in), B = canonical_span(B_in);
  require(!A.empty() && !B.empty(), "pair_capacity needs nonempty sets");
  require(disjoint(A, B), "pair_capacity sets overlap");
  bool charged = false;
  return capacity_between(A, B, charged);
}

bool OracleView::bis(std::span<const Vertex> A_in, std::span<const Vertex> B_in) {
  check_ids(A_in);
  check_ids(B_in);
  const VertexSet A = canonical_span(A_in), B = canonical_span(B_in);
  require(disjoint(A, B), "BIS sets overlap");
  if (A.empty() || B.empty()) return false;
  bool charged = false;
  const Capacity c = capacity_between(A, B, charged);
  charged ? ledger().note_bis() : ledger().note_bis_shortcut();
  return c > 0;
}

bool OracleView::residual_bis(const Flow& f, std::span<const Vertex> A_in, std::span<const Vertex> B_in) {
  ensure(f.size() == size_, "flow does not belong to this view");
  check_ids(A_in);
  check_ids(B_in);
  const VertexSet A = canonical_span(A_in), B = canonical_span(B_in);
  require(disjoint(A, B), "residual BIS sets overlap");
  if (A.empty() || B.empty()) return false;
  bool charged = false;
  const Capacity c = capacity_between(A, B, charged);
  charged ? ledger().note_bis() : ledger().note_bis_shortcut();
  const Capacity r = c - f.sum_between(A, B);
  ensure(r >= 0, "flow exceeds capacity");
  return r > 0;
}

std::optional<Capacity> OracleView::known_capacity(Vertex x, Vertex y) const {
  if (is_virtual(x) || is_virtual(y)) return virtual_pair(x, y);
  const auto& row = known_[idx(x)];
  if (auto it = row.find(y); it != row.end()) return it->second;
  const Vertex bx = base_id(x), by = base_id(y);
  if (bx < 0 || by < 0) return std::nullopt;
  if (deleted_pair(bx, by)) {
    if (auto c = oracle_->learned(bx, by)) return virtual_pair(x, y);
    return std::nullopt;
  }
  if (auto c = oracle_->learned(bx, by)) return scale_ * *c + virtual_pair(x, y);
  return std::nullopt;
}

OracleView::Row OracleView::known_positive(Vertex x) const {
  Row out;
  for (const auto& [y, c] : known_[idx(x)])
    if (c > 0) out.emplace_back(y, c);
  const Vertex bx = base_id(x);
  if (bx < 0) return out;
  for (const auto& [by, c] : oracle_->learned_positive(bx)) {
    const Vertex y = view_of_base_[static_cast<std::size_t>(by)];
    if (y < 0 || y == x || known_[idx(x)].count(y) || deleted_pair(bx, by)) continue;
    const Capacity v = scale_ * c + virtual_pair(x, y);
    if (v > 0) out.emplace_back(y, v);
  }
  return out;
}

void OracleView::note_residual(const Flow& f, Vertex x, Vertex y, bool positive) {
  const Vertex bx = base_id(x), by = base_id(y);
  if (bx < 0 || by < 0 || is_virtual(x) || is_virtual(y) || f.at(x, y) != 0) return;
  if (virtual_pair(x, y) != 0 || deleted_pair(bx, by)) return;
  if (!positive) oracle_->record(bx, by, 0);
  else if (oracle_->max_capacity() == 1) oracle_->record(bx, by, 1);
}

Capacity OracleView::learn_capacity(Vertex x, Vertex y) {
  check_ids(std::array{x, y});
  require(x != y, "learn_capacity on a single vertex");
  if (auto c = known_capacity(x, y)) return *c;
  Capacity c = 0;
  const Vertex bx = base_id(x), by = base_id(y);
  const bool plain = bx >= 0 && by >= 0;
  const bool deleted = plain && deleted_pair(bx, by);
  if (plain && !deleted && oracle_->max_capacity() == 1) {
    c = scale_ + virtual_pair(x, y);
  } else {
    const Vertex a[1] = {x}, b[1] = {y};
    c = pair_capacity(a, b);
  }
  if (plain && !deleted) {
    const Capacity raw = c - virtual_pair(x, y);
    if (raw % scale_ == 0) oracle_->record(bx, by, raw / scale_);
  }
  known_[idx(x)][y] = c;
  known_[idx(y)][x] = c;
  return c;
}

Capacity OracleView::remove_direct_edge(Vertex x, Vertex y) {
  const Capacity c = learn_capacity(x, y);
  if (c != 0) add_virtual(x, y, -c);
  if (!is_virtual(x) && !is_virtual(y)) {
    known_[idx(x)][y] = 0;
    known_[idx(y)][x] = 0;
  }
  return c;
}

}  // namespace cutq

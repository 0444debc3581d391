#include "cutq/expander.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

namespace cutq {

namespace {

void check_terminals(const OracleView& view, const VertexSet& R) {
  for (Vertex r : R) require(r >= 0 && r < view.size(), "terminal out of range: " + std::to_string(r));
}

// Deterministic approximate Fiedler vector of the Laplacian of w.
std::vector<double> fiedler(const DenseMatrix& w, int iterations) {
  const std::size_t m = w.size();
  std::vector<double> deg(m, 0), x(m), y(m);
  double dmax = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) deg[i] += static_cast<double>(w[i][j]);
    dmax = std::max(dmax, deg[i]);
  }
  const double c = 2 * dmax + 1;
  for (std::size_t i = 0; i < m; ++i) x[i] = static_cast<double>(i) - static_cast<double>(m - 1) / 2;
  for (int it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < m; ++i) {
      double lx = deg[i] * x[i];
      for (std::size_t j = 0; j < m; ++j) lx -= static_cast<double>(w[i][j]) * x[j];
      y[i] = c * x[i] - lx;
    }
    const double mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(m);
    double norm = 0;
    for (auto& v : y) {
      v -= mean;
      norm += v * v;
    }
    norm = std::sqrt(norm);
    if (norm == 0) break;
    for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / norm;
  }
  return x;
}

std::vector<int> order_by(const std::vector<double>& key) {
  std::vector<int> idx(key.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
  });
  return idx;
}

DenseMatrix submatrix(const DenseMatrix& w, const std::vector<int>& keep) {
  DenseMatrix out(keep.size(), std::vector<Capacity>(keep.size(), 0));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      out[i][j] = w[static_cast<std::size_t>(keep[i])][static_cast<std::size_t>(keep[j])];
  return out;
}

// A cut of H = w with conductance below `limit`, as a mask of local indices
// (the side to peel is chosen by the caller). Empty when none is found.
struct LowCut {
  std::vector<int> side;
  bool found = false;
};

LowCut low_conductance_exact(const DenseMatrix& w, double limit) {
  const int c = static_cast<int>(w.size());
  const auto cuts = all_cut_values(w);
  std::vector<Capacity> deg(static_cast<std::size_t>(c), 0);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) deg[static_cast<std::size_t>(i)] += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  const Capacity total = std::accumulate(deg.begin(), deg.end(), Capacity{0});
  const std::uint32_t full = (1u << c) - 1;
  std::vector<Capacity> vol(std::size_t{1} << c, 0);
  double best = limit;
  std::uint32_t arg = 0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    vol[mask] = vol[mask & (mask - 1)] + deg[static_cast<std::size_t>(std::countr_zero(mask))];
    if (!(mask & 1)) continue;
    const Capacity v = std::min(vol[mask], total - vol[mask]);
    const double cond = v == 0 ? 0.0 : static_cast<double>(cuts[mask]) / static_cast<double>(v);
    if (cond < best) best = cond, arg = mask;
  }
  LowCut out;
  if (!arg) return out;
  out.found = true;
  for (int i = 0; i < c; ++i)
    if (arg >> i & 1) out.side.push_back(i);
  return out;
}

LowCut low_conductance_spectral(const DenseMatrix& w, double limit) {
  const std::size_t c = w.size();
  // Disconnected pieces first: they have conductance zero.
  std::vector<int> comp(c, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < c; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < c; ++v)
        if (w[u][v] > 0 && comp[v] < 0) comp[v] = ncomp, stack.push_back(v);
    }
    ++ncomp;
  }
  LowCut out;
  if (ncomp > 1) {
    out.found = true;
    for (std::size_t i = 0; i < c; ++i)
      if (comp[i] == 0) out.side.push_back(static_cast<int>(i));
    return out;
  }
  const auto order = order_by(fiedler(w, 200));
  std::vector<Capacity> deg(c, 0);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) deg[i] += w[i][j];
  const Capacity total = std::accumulate(deg.begin(), deg.end(), Capacity{0});
  std::vector<char> in(c, 0);
  Capacity e = 0, vol = 0;
  double best = limit;
  std::size_t arg = 0;
  for (std::size_t k = 0; k + 1 < c; ++k) {
    const auto v = static_cast<std::size_t>(order[k]);
    Capacity inside = 0;
    for (std::size_t u = 0; u < c; ++u)
      if (in[u]) inside += w[v][u];
    e += deg[v] - 2 * inside;
    vol += deg[v];
    in[v] = 1;
    const Capacity mv = std::min(vol, total - vol);
    const double cond = mv == 0 ? 0.0 : static_cast<double>(e) / static_cast<double>(mv);
    if (cond < best) best = cond, arg = k + 1;
  }
  if (!arg) return out;
  out.found = true;
  out.side.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(arg));
  std::sort(out.side.begin(), out.side.end());
  return out;
}

}  // namespace

WitnessGraph::WitnessGraph(const VertexSet& terminals, Capacity b) : terminals_(terminals), b_(b) {
  require(b >= 1, "witness degree unit must be >= 1");
  if (terminals_.size() % 2) {
    phantom_ = static_cast<int>(terminals_.size());
    terminals_.push_back(terminals_.back());
  }
  const auto m = terminals_.size();
  real_.assign(m, std::vector<Capacity>(m, 0));
  fake_.assign(m, std::vector<Capacity>(m, 0));
}

void WitnessGraph::add(int i, int j, Capacity units, bool is_fake) {
  require(i != j, "witness self-loop");
  require(i >= 0 && j >= 0 && i < slots() && j < slots(), "witness slot out of range");
  require(units >= 0, "negative witness multiplicity");
  auto& w = is_fake ? fake_ : real_;
  w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += units;
  w[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] += units;
}

Capacity WitnessGraph::degree(int i) const {
  Capacity d = 0;
  for (int j = 0; j < slots(); ++j) d += real(i, j) + fake(i, j);
  return d;
}

Capacity WitnessGraph::fake_degree(int i) const {
  Capacity d = 0;
  for (int j = 0; j < slots(); ++j) d += fake(i, j);
  return d;
}

Capacity WitnessGraph::fake_edge_count() const {
  Capacity d = 0;
  for (int i = 0; i < slots(); ++i) d += fake_degree(i);
  return d / 2;
}

DenseMatrix WitnessGraph::combined() const {
  DenseMatrix w = real_;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) w[i][j] += fake_[i][j];
  return w;
}

Bisection cut_player(const WitnessGraph& X, int exhaustive_max) {
  const int m = X.slots();
  require(m >= 2 && m % 2 == 0, "cut player needs an even slot count");
  const int half = m / 2;
  std::vector<char> inA(static_cast<std::size_t>(m), 0);
  if (m <= std::min(exhaustive_max, kExhaustiveLimit)) {
    const auto cuts = all_cut_values(X.combined());
    std::uint32_t arg = 0;
    Capacity bc = 0;
    int bp = 1;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      const int pc = std::popcount(mask);
      if (pc > half) continue;
      if (!arg || cuts[mask] * bp < bc * pc) arg = mask, bc = cuts[mask], bp = pc;
    }
    int size = 0;
    for (int i = 0; i < m; ++i)
      if (arg >> i & 1) inA[static_cast<std::size_t>(i)] = 1, ++size;
    for (int i = 0; i < m && size < half; ++i)
      if (!inA[static_cast<std::size_t>(i)]) inA[static_cast<std::size_t>(i)] = 1, ++size;
  } else {
    const auto order = order_by(fiedler(X.combined(), 100));
    for (int k = 0; k < half; ++k) inA[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = 1;
  }
  Bisection out;
  for (int i = 0; i < m; ++i) (inA[static_cast<std::size_t>(i)] ? out.A : out.B).push_back(i);
  return out;
}

double witness_sparsity(const WitnessGraph& X) {
  const int m = X.slots();
  const auto cuts = all_cut_values(X.combined());
  double best = INFINITY;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const int pc = std::popcount(mask);
    if (pc <= m / 2) best = std::min(best, static_cast<double>(cuts[mask]) / pc);
  }
  return best;
}

MatchingResult matching_player(OracleView& view, const VertexSet& A_in, const VertexSet& B_in, Capacity tau,
                               double phi, std::int64_t beta, Capacity internal, Vertex doubled) {
  const VertexSet A = canonical(A_in), B = canonical(B_in);
  require(!A.empty() && !B.empty(), "matching player needs both sides");
  require(disjoint(A, B), "matching sides overlap");
  require(phi > 0 && phi <= 1, "phi must lie in (0,1]");
  require(beta >= 1, "beta must be >= 1");
  require(tau >= 0, "tau must be non-negative");
  require(doubled < 0 || contains(A, doubled) || contains(B, doubled), "doubled terminal is on neither side");
  const Capacity b = tau + 1;
  MatchingResult out;
  out.internal = internal > 0 ? internal : static_cast<Capacity>(std::ceil(1.0 / phi - 1e-9));
  std::vector<Terminal> ta, tb;
  for (Vertex a : A) ta.push_back({a, a == doubled ? 2 * b : b});
  for (Vertex x : B) tb.push_back({x, x == doubled ? 2 * b : b});
  OracleView aug = OracleView::augmented(view, ta, tb, out.internal);
  FlowResult fr = dinitz_maxflow(aug, aug.source(), aug.sink());
  out.flow_value = fr.value;
  const Vertex N = view.size();
  // Below this at least beta terminals of A stay unsaturated.
  const auto slots_a = static_cast<Capacity>(A.size()) + (contains(A, doubled) ? 1 : 0);
  const auto slots_b = static_cast<Capacity>(B.size()) + (contains(B, doubled) ? 1 : 0);
  const Capacity need = (std::min(slots_a, slots_b) - beta + 1) * b;
  if (fr.value >= need) {
    std::map<std::pair<Vertex, Vertex>, Capacity> agg;
    for (auto& p : path_decomposition(fr.flow)) {
      std::vector<Vertex> inner;
      for (Vertex v : p.vertices)
        if (v < N) inner.push_back(v);
      ensure(inner.size() >= 2 && contains(A, inner.front()) && contains(B, inner.back()),
             "matching path does not join A to B");
      agg[{inner.front(), inner.back()}] += p.units;
      out.embedding.push_back({std::move(inner), p.units});
    }
    for (const auto& [ab, u] : agg) out.matching.push_back({ab.first, ab.second, u});
    return out;
  }
  out.sparse = true;
  for (Vertex v : fr.mincut_source_side)
    if (v < N) out.cut_side.push_back(v);
  for (Vertex u : out.cut_side)
    for (const auto& [v, x] : fr.flow.row(u))
      if (v < N && x > 0 && !contains(out.cut_side, v)) {
        ensure(x % out.internal == 0, "cut edge is not saturated");
        out.cut_edges.push_back({u, v, x / out.internal});
      }
  return out;
}

PruneResult prune(const WitnessGraph& X, double phi_x, int exhaustive_max) {
  require(phi_x > 0 && phi_x <= 1, "phi_x must lie in (0,1]");
  const double limit = phi_x / 6;
  PruneResult out;
  std::vector<int> cur(static_cast<std::size_t>(X.slots()));
  std::iota(cur.begin(), cur.end(), 0);
  while (cur.size() > 1) {
    const DenseMatrix h = submatrix(X.real_matrix(), cur);
    const LowCut lc = static_cast<int>(cur.size()) <= std::min(exhaustive_max, kExhaustiveLimit)
                          ? low_conductance_exact(h, limit)
                          : low_conductance_spectral(h, limit);
    if (!lc.found) break;
    std::vector<char> in(cur.size(), 0);
    for (int i : lc.side) in[static_cast<std::size_t>(i)] = 1;
    Capacity vin = 0, vout = 0;
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = 0; j < cur.size(); ++j) (in[i] ? vin : vout) += h[i][j];
    // Peel the smaller-volume side; on a tie keep the side holding cur[0].
    const bool peel_in = vin < vout || (vin == vout && !in[0]);
    std::vector<int> keep;
    for (std::size_t i = 0; i < cur.size(); ++i)
      (static_cast<bool>(in[i]) == peel_in ? out.pruned : keep).push_back(cur[i]);
    cur = std::move(keep);
    ++out.peels;
  }
  std::sort(out.pruned.begin(), out.pruned.end());
  for (int p : out.pruned) out.pruned_volume += X.degree(p);
  out.volume_bound = 8.0 / phi_x * static_cast<double>(X.fake_edge_count());
  out.within_bound = static_cast<double>(out.pruned_volume) <= out.volume_bound;
  return out;
}

namespace {

// Shrink `core` until every cut T of the witness's real edges has
// E(T) >= b * min(|T ∩ core|, |core \ T|).
VertexSet certify_core(const WitnessGraph& X, const std::vector<int>& slots, std::vector<char>& in_core) {
  DenseMatrix w = X.real_matrix();
  if (const int ph = X.phantom(); ph >= 0) {
    // Edges at the phantom embed at its original terminal.
    const auto p = static_cast<std::size_t>(ph), o = p - 1;
    for (std::size_t j = 0; j < w.size(); ++j) {
      w[o][j] += w[p][j];
      w[j][o] += w[j][p];
    }
    w[o][o] = 0;
  }
  const auto cuts = all_cut_values(submatrix(w, slots));
  const int k = static_cast<int>(slots.size());
  while (true) {
    std::uint32_t core = 0;
    for (int i = 0; i < k; ++i)
      if (in_core[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])]) core |= 1u << i;
    std::uint32_t bad = 0;
    bool found = false;
    for (std::uint32_t mask = 1; mask + 1 < (1u << k) && !found; ++mask) {
      const Capacity lo = std::min(std::popcount(mask & core), std::popcount(core & ~mask));
      if (cuts[mask] < X.b() * lo) bad = mask, found = true;
    }
    if (!found) break;
    const std::uint32_t drop =
        std::popcount(bad & core) <= std::popcount(core & ~bad) ? (bad & core) : (core & ~bad);
    for (int i = 0; i < k; ++i)
      if (drop >> i & 1) in_core[static_cast<std::size_t>(slots[static_cast<std::size_t>(i)])] = 0;
  }
  VertexSet out;
  for (int s : slots)
    if (in_core[static_cast<std::size_t>(s)]) out.push_back(X.terminal(s));
  return out;
}

}  // namespace

OneStepResult one_step(OracleView& view, const VertexSet& R_in, Capacity tau, const Config& cfg) {
  const VertexSet R = canonical(R_in);
  require(R.size() >= 2, "one_step needs at least two terminals");
  check_terminals(view, R);
  const Vertex n = view.oracle().n();
  const double phi = cfg.phi_for(n);
  const Capacity b = tau + 1;
  OneStepResult out;
  out.witness = WitnessGraph(R, b);
  WitnessGraph& X = out.witness;
  const int m = X.slots();
  const int cap = std::max(1, static_cast<int>(std::floor(1.0 / phi + 1e-9)));
  const int rounds = std::max(1, std::min(cfg.rounds_for(static_cast<std::size_t>(m)), cap));
  out.internal = std::max<Capacity>(1, static_cast<Capacity>(std::floor(1.0 / (phi * rounds) + 1e-9)));
  const std::int64_t beta = cfg.beta_for(R.size(), n);
  auto slot_of = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(R.begin(), R.end(), v) - R.begin());
  };

  PhaseScope phase(view.ledger(), "expander/one_step");
  for (int r = 1; r <= rounds; ++r) {
    out.rounds = r;
    const Bisection bis = cut_player(X, cfg.cut_player_exhaustive_max);
    // The phantom copies the highest terminal (slot ph - 1). Copies on
    // opposite sides match each other along the empty path.
    const int ph = X.phantom(), orig = ph - 1;
    std::vector<char> on_a(static_cast<std::size_t>(m), 0);
    for (int s : bis.A) on_a[static_cast<std::size_t>(s)] = 1;
    const bool split = ph >= 0 && on_a[static_cast<std::size_t>(ph)] != on_a[static_cast<std::size_t>(orig)];
    VertexSet ta, tb;
    for (int s = 0; s < m; ++s)
      if (s != ph && !(split && s == orig)) (on_a[static_cast<std::size_t>(s)] ? ta : tb).push_back(X.terminal(s));
    const Vertex doubled = ph >= 0 && !split ? X.terminal(ph) : -1;
    MatchingResult mp = matching_player(view, ta, tb, tau, phi, beta, out.internal, doubled);
    if (mp.sparse) {
      ensure(!set_intersection(mp.cut_side, R).empty() && set_intersection(mp.cut_side, R) != R,
             "sparse cut does not split the terminals");
      out.kind = OneStepResult::Kind::balanced_sparse_cut;
      out.side = std::move(mp.cut_side);
      out.cut_edges = std::move(mp.cut_edges);
      return out;
    }
    X.next_round();
    std::vector<Capacity> used(static_cast<std::size_t>(m), 0);
    if (split) {
      X.add(orig, ph, b, false);
      used[static_cast<std::size_t>(orig)] = used[static_cast<std::size_t>(ph)] = b;
    }
    auto slots_of = [&](Vertex v) {
      const int s = slot_of(v);
      return v == doubled ? std::vector<int>{s, ph} : std::vector<int>{s};
    };
    for (const auto& e : mp.matching) {
      const auto sa = slots_of(e.a), sb = slots_of(e.b);
      std::size_t ia = 0, ib = 0;
      for (Capacity left = e.units; left > 0;) {
        while (ia < sa.size() && used[static_cast<std::size_t>(sa[ia])] == b) ++ia;
        while (ib < sb.size() && used[static_cast<std::size_t>(sb[ib])] == b) ++ib;
        ensure(ia < sa.size() && ib < sb.size(), "matching exceeds slot demand");
        const auto x = static_cast<std::size_t>(sa[ia]), y = static_cast<std::size_t>(sb[ib]);
        const Capacity d = std::min({left, b - used[x], b - used[y]});
        X.add(sa[ia], sb[ib], d, false);
        used[x] += d;
        used[y] += d;
        left -= d;
      }
    }
    // Complete to a perfect b-matching with fake edges, greedily by slot.
    std::size_t i = 0, j = 0;
    auto deficit = [&](int s) { return b * X.round() - X.degree(s); };
    while (i < bis.A.size() && j < bis.B.size()) {
      const int sa = bis.A[i], sb = bis.B[j];
      const Capacity d = std::min(deficit(sa), deficit(sb));
      if (d > 0) X.add(sa, sb, d, true);
      if (deficit(sa) == 0) ++i;
      if (deficit(sb) == 0) ++j;
    }
    for (int s = 0; s < m; ++s) ensure(X.degree(s) == b * X.round(), "witness degree invariant broken");
    if (m <= std::min(cfg.cut_player_exhaustive_max, kExhaustiveLimit) && witness_sparsity(X) >= static_cast<double>(b))
      break;
  }

  out.pruning = prune(X, cfg.phi_x_for(n), cfg.prune_exhaustive_max);
  std::vector<char> pruned(static_cast<std::size_t>(m), 0), in_core(static_cast<std::size_t>(m), 0);
  for (int p : out.pruning.pruned) pruned[static_cast<std::size_t>(p)] = 1;
  const double allowance = cfg.markov_fraction * static_cast<double>(b);
  std::vector<int> real_slots;
  for (int s = 0; s < m; ++s) {
    if (s == X.phantom()) continue;
    real_slots.push_back(s);
    if (pruned[static_cast<std::size_t>(s)]) continue;
    Capacity bad = X.fake_degree(s);
    for (int p : out.pruning.pruned) bad += X.real(s, p);
    if (static_cast<double>(bad) <= allowance) in_core[static_cast<std::size_t>(s)] = 1;
  }
  const bool congestion_ok = static_cast<double>(out.internal * out.rounds) <= 1.0 / phi + 1e-9;
  if (congestion_ok && static_cast<int>(real_slots.size()) <= std::min(cfg.certify_max_slots, kExhaustiveLimit)) {
    out.core = certify_core(X, real_slots, in_core);
    out.certified = true;
  } else {
    for (int s : real_slots)
      if (in_core[static_cast<std::size_t>(s)]) out.core.push_back(X.terminal(s));
  }
  out.kind = OneStepResult::Kind::core;
  return out;
}

const char* to_string(PartClass c) {
  switch (c) {
    case PartClass::empty: return "empty";
    case PartClass::small: return "small";
    case PartClass::large: return "large";
  }
  return "?";
}

PartClass classify(std::size_t core_size, double phi) {
  if (core_size == 0) return PartClass::empty;
  return static_cast<double>(core_size) <= 1.0 / (phi * phi) + 1e-9 ? PartClass::small : PartClass::large;
}

Decomposition decompose(OracleView& view, const VertexSet& R_in, Capacity tau, const Config& cfg) {
  const VertexSet R = canonical(R_in);
  check_terminals(view, R);
  for (Vertex x = 0; x < view.size(); ++x)
    require(view.virtual_row(x).empty(), "decompose needs a view without virtual edges");
  const double phi = cfg.phi_for(view.oracle().n());
  Decomposition out;
  struct Work {
    VertexSet V;
    int depth;
  };
  std::vector<Work> stack{{view.universe(), 0}};
  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    out.depth = std::max(out.depth, w.depth);
    const VertexSet Ri = set_intersection(w.V, R);
    if (Ri.size() < 2) {
      out.parts.push_back({w.V, Ri, Ri, classify(Ri.size(), phi), true});
      continue;
    }
    std::vector<Edge> boundary;
    for (const auto& e : out.crossing)
      if (contains(w.V, e.u) != contains(w.V, e.v)) boundary.push_back(e);
    OracleView part = OracleView::induced(view, w.V, boundary);
    VertexSet local;
    for (Vertex r : Ri) local.push_back(static_cast<Vertex>(std::lower_bound(w.V.begin(), w.V.end(), r) - w.V.begin()));
    OneStepResult os = one_step(part, local, tau, cfg);
    if (os.kind == OneStepResult::Kind::core) {
      VertexSet core;
      for (Vertex x : os.core) core.push_back(part.origin(x));
      std::sort(core.begin(), core.end());
      const PartClass cls = classify(core.size(), phi);
      out.parts.push_back({std::move(w.V), Ri, std::move(core), cls, os.certified});
      continue;
    }
    VertexSet S;
    for (Vertex x : os.side) S.push_back(part.origin(x));
    std::sort(S.begin(), S.end());
    for (const auto& e : os.cut_edges) out.crossing.push_back({part.origin(e.u), part.origin(e.v), e.w});
    VertexSet rest = set_difference(w.V, S);
    stack.push_back({std::move(rest), w.depth + 1});
    stack.push_back({std::move(S), w.depth + 1});
  }
  std::sort(out.parts.begin(), out.parts.end(),
            [](const DecompositionPart& a, const DecompositionPart& b) { return a.V.front() < b.V.front(); });
  for (auto& e : out.crossing)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(out.crossing.begin(), out.crossing.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return out;
}

}  // namespace cutq

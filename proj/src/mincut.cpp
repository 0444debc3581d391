#include "cutq/mincut.hpp"

#include <cmath>

#include "cutq/isolating.hpp"
#include "cutq/primitives.hpp"

namespace cutq {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int ceil_log2(std::size_t x) { return x <= 1 ? 0 : static_cast<int>(std::bit_width(x - 1)); }

}  // namespace

SplitterFamily splitter_family(int n, int k) {
  require(n >= 1, "splitter universe must be nonempty");
  require(k >= 0, "splitter parameter must be non-negative");
  SplitterFamily out{n, k, {}};
  if (k == 0) return out;
  require(k < n, "splitter parameter must be below the universe size");

  // Some prime in the list divides no pairwise difference of S once the
  // product of the primes exceeds n^(k choose 2); its residue classes then
  // separate S completely.
  const double needed = static_cast<double>(k) * (k - 1) / 2 * std::log(static_cast<double>(n));
  double have = 0;
  std::vector<int> primes;
  for (int p = 2; p <= n / 2 && have <= needed; ++p)
    if (is_prime(p)) primes.push_back(p), have += std::log(static_cast<double>(p));
  std::size_t prime_size = 1;
  for (int p : primes) prime_size += static_cast<std::size_t>(p);
  const bool primes_ok = have > needed || k == 1;

  if (primes_ok && prime_size <= static_cast<std::size_t>(n - 1)) {
    std::vector<int> full(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) full[static_cast<std::size_t>(i)] = i;
    out.sets.push_back(std::move(full));
    if (k > 1)
      for (int p : primes)
        for (int a = 0; a < p; ++a) {
          std::vector<int> cls;
          for (int x = a; x < n; x += p) cls.push_back(x);
          out.sets.push_back(std::move(cls));
        }
  } else {
    for (int x = 1; x < n; ++x) out.sets.push_back({0, x});
  }
  return out;
}

std::vector<Capacity> vertex_degrees(OracleView& view) {
  PhaseScope phase(view.ledger(), "mincut/degrees");
  std::vector<Capacity> deg(static_cast<std::size_t>(view.size()));
  for (Vertex v = 0; v < view.size(); ++v) {
    const Vertex s[1] = {v};
    deg[static_cast<std::size_t>(v)] = view.cut(s);
  }
  return deg;
}

VertexSet dominating_set(OracleView& view) { return dominating_set(view, vertex_degrees(view)); }

VertexSet dominating_set(OracleView& view, std::span<const Capacity> degrees) {
  const Vertex n = view.size();
  require(n >= 1, "dominating set of an empty graph");
  require(degrees.size() == static_cast<std::size_t>(n), "degree vector has the wrong size");
  PhaseScope phase(view.ledger(), "mincut/domset");
  const Capacity delta = *std::min_element(degrees.begin(), degrees.end());
  const Flow zero(n, 0, 0);
  VertexSet R;
  VertexSet alive = view.universe();
  std::vector<char> in_r(static_cast<std::size_t>(n), 0);
  auto remove = [&alive](const VertexSet& gone) { alive = set_difference(alive, gone); };

  // Reduction rule: one pass suffices because G'-degrees only decrease.
  Capacity cut_alive = 0;
  for (Vertex w = 0; w < n; ++w) {
    if (!contains(alive, w)) continue;
    const Vertex single[1] = {w};
    const VertexSet others = set_difference(alive, single);
    if (others.empty()) break;
    const Capacity twice = degrees[static_cast<std::size_t>(w)] + view.cut(others) - cut_alive;
    if (twice <= delta) continue;  // deg_G'(w) <= delta/2: irrelevant from now on
    R.push_back(w);
    in_r[static_cast<std::size_t>(w)] = 1;
    VertexSet gone = neighborhood(view, zero, single, others);
    gone.insert(std::lower_bound(gone.begin(), gone.end(), w), w);
    remove(gone);
    cut_alive = view.cut(alive);
  }

  // Averaging search over W1 = V \ (V(G') ∪ R), all of which neighbor R.
  while (!alive.empty()) {
    VertexSet W1;
    for (Vertex v = 0; v < n; ++v)
      if (!in_r[static_cast<std::size_t>(v)] && !contains(alive, v)) W1.push_back(v);
    auto edges_to_alive = [&](const VertexSet& U) {
      return (view.cut(U) + cut_alive - view.cut(set_union(U, alive))) / 2;
    };
    Capacity total = W1.empty() ? 0 : edges_to_alive(W1);
    Vertex pick = -1;
    if (total > 0) {
      VertexSet U = std::move(W1);
      while (U.size() > 1) {
        VertexSet lo(U.begin(), U.begin() + static_cast<std::ptrdiff_t>(U.size() / 2));
        VertexSet hi(U.begin() + static_cast<std::ptrdiff_t>(U.size() / 2), U.end());
        const Capacity e = edges_to_alive(lo);
        // e/|lo| >= total/|U| or the other half is at least average.
        if (e * static_cast<Capacity>(U.size()) >= total * static_cast<Capacity>(lo.size())) {
          U = std::move(lo);
          total = e;
        } else {
          U = std::move(hi);
          total -= e;
        }
      }
      pick = U[0];
      const Vertex single[1] = {pick};
      remove(neighborhood(view, zero, single, alive));
    } else {
      pick = alive.front();
      const Vertex single[1] = {pick};
      const VertexSet others = set_difference(alive, single);
      VertexSet gone = others.empty() ? VertexSet{} : neighborhood(view, zero, single, others);
      gone.insert(std::lower_bound(gone.begin(), gone.end(), pick), pick);
      remove(gone);
    }
    R.insert(std::lower_bound(R.begin(), R.end(), pick), pick);
    in_r[static_cast<std::size_t>(pick)] = 1;
    cut_alive = alive.empty() ? 0 : view.cut(alive);
  }
  return R;
}

int unbalanced_k(const Config& cfg, Vertex n, std::size_t terminals) {
  const int half = static_cast<int>(terminals / 2);
  if (cfg.splitter_k > 0) return std::min(cfg.splitter_k, half);
  const double phi = cfg.phi_for(n);
  const double k = std::ceil(std::pow(1 / phi, 3) + 1 / phi - 1e-9);
  return k >= half ? half : static_cast<int>(k);
}

UnbalancedResult unbalanced_case(OracleView& view, const VertexSet& R_in, Capacity tau, int k) {
  const VertexSet R = canonical(R_in);
  UnbalancedResult out;
  const int r = static_cast<int>(R.size());
  out.k = std::min(k, r / 2);
  out.exhaustive = out.k >= r / 2;
  if (r < 2 || out.k <= 0) return out;
  PhaseScope phase(view.ledger(), "mincut/unbalanced");
  const SplitterFamily fam = splitter_family(r, out.k);
  out.family_size = fam.sets.size();
  for (const auto& set : fam.sets) {
    VertexSet F;
    for (int i : set) F.push_back(R[static_cast<std::size_t>(i)]);
    ++out.sets_run;
    IsolatingResult iso = isolating_cuts(view, F, tau);
    if (iso.found) {
      const auto& rec = iso.record(*iso.best);
      out.cut = FoundCut{rec.lambda, *rec.side};
      return out;
    }
  }
  return out;
}

SparsifyResult balanced_sparsify(OracleView& view, const VertexSet& R_in, Capacity tau, const Config& cfg) {
  const VertexSet R = canonical(R_in);
  SparsifyResult out;
  out.decomposition = decompose(view, R, tau, cfg);
  PhaseScope phase(view.ledger(), "mincut/balanced");
  if (out.decomposition.parts.size() > 1)
    for (const auto& p : out.decomposition.parts) {
      const Capacity c = view.cut(p.V);
      if (c <= tau) {
        out.cut = FoundCut{c, p.V};
        return out;
      }
    }
  const double phi = cfg.phi_for(view.oracle().n());
  const auto per_large = static_cast<std::size_t>(1 + std::ceil(1 / phi - 1e-9));
  for (const auto& p : out.decomposition.parts) {
    const VertexSet outside_core = set_difference(p.R, p.core);
    out.sparsified.insert(out.sparsified.end(), outside_core.begin(), outside_core.end());
    switch (p.cls) {
      case PartClass::empty: break;
      case PartClass::small: out.sparsified.push_back(p.core.front()); break;
      case PartClass::large:
        out.sparsified.insert(out.sparsified.end(), p.core.begin(),
                              p.core.begin() + static_cast<std::ptrdiff_t>(std::min(per_large, p.core.size())));
        break;
    }
  }
  out.sparsified = canonical(std::move(out.sparsified));
  return out;
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::degree_cut: return "degree_cut";
    case Certificate::isolating_cut: return "isolating_cut";
    case Certificate::threshold_path: return "threshold_path";
    case Certificate::disconnected: return "disconnected";
  }
  return "?";
}

MincutContext prepare_mincut(OracleView& view) {
  MincutContext ctx;
  ctx.degrees = vertex_degrees(view);
  const auto it = std::min_element(ctx.degrees.begin(), ctx.degrees.end());
  ctx.delta = *it;
  ctx.argmin = static_cast<Vertex>(it - ctx.degrees.begin());
  ctx.dominating = dominating_set(view, ctx.degrees);
  return ctx;
}

ThresholdResult threshold_mincut(OracleView& view, Capacity tau, const Config& cfg) {
  return threshold_mincut(view, tau, cfg, prepare_mincut(view));
}

ThresholdResult threshold_mincut(OracleView& view, Capacity tau, const Config& cfg, const MincutContext& ctx) {
  require(tau >= 0, "tau must be non-negative");
  require(tau <= ctx.delta - 1, "tau must be at most delta - 1");
  ThresholdResult out;
  VertexSet R = ctx.dominating;
  const Vertex n = view.oracle().n();
  const int limit = ceil_log2(R.size()) + 1;
  auto exhaustive = [&](const VertexSet& terms) {
    out.fallback = true;
    auto uc = unbalanced_case(view, terms, tau, static_cast<int>(terms.size() / 2));
    if (uc.cut) out.cut = uc.cut, out.via = Certificate::isolating_cut;
    return out;
  };
  for (int it = 0; it < limit; ++it) {
    out.iterations = it + 1;
    out.terminal_sizes.push_back(R.size());
    // Every cut of size <= tau splits R, so one terminal means no such cut.
    if (R.size() <= 1) return out;
    const UnbalancedResult uc = unbalanced_case(view, R, tau, unbalanced_k(cfg, n, R.size()));
    if (uc.cut) {
      out.cut = uc.cut;
      out.via = Certificate::isolating_cut;
      return out;
    }
    if (uc.exhaustive) return out;
    SparsifyResult bs = balanced_sparsify(view, R, tau, cfg);
    if (bs.cut) {
      out.cut = bs.cut;
      out.via = Certificate::threshold_path;
      return out;
    }
    if (static_cast<double>(bs.sparsified.size()) >= cfg.zeta * static_cast<double>(R.size())) return exhaustive(R);
    R = std::move(bs.sparsified);
  }
  return exhaustive(R);
}

MinCutAnswer global_mincut(OracleView& view, const Config& cfg) {
  const Vertex n = view.size();
  require(n >= 2, "global min-cut needs at least two vertices");
  require(view.oracle().max_capacity() <= 1 && view.scale() == 1,
          "global min-cut is defined for simple unweighted graphs");
  for (Vertex x = 0; x < n; ++x)
    require(!view.is_virtual(x) && view.virtual_row(x).empty(), "global min-cut needs a view without virtual structure");
  MinCutAnswer out;
  auto finish = [&]() {
    out.ledger = view.ledger().snapshot();
    return out;
  };

  {
    PhaseScope phase(view.ledger(), "mincut/connectivity");
    VertexSet reached;
    for (const auto& layer : bfs_layers(view, Flow(n, 0, 0), 0)) reached.insert(reached.end(), layer.begin(), layer.end());
    std::sort(reached.begin(), reached.end());
    if (reached.size() < static_cast<std::size_t>(n)) {
      out.value = 0;
      out.side = std::move(reached);
      out.certificate = Certificate::disconnected;
      return finish();
    }
  }

  const MincutContext ctx = prepare_mincut(view);
  out.delta = ctx.delta;
  out.dominating_size = ctx.dominating.size();
  out.value = ctx.delta;
  out.side = {ctx.argmin};
  out.certificate = Certificate::degree_cut;
  auto probe = [&](Capacity tau) {
    ThresholdResult r = threshold_mincut(view, tau, cfg, ctx);
    out.probes.push_back({tau, r.cut.has_value(), r.cut ? r.cut->value : 0});
    if (r.cut) {
      ensure(r.cut->value <= tau, "threshold cut exceeds tau");
      out.value = r.cut->value;
      out.side = r.cut->side;
      out.certificate = r.via;
    }
    return r.cut.has_value();
  };
  // Smallest tau whose threshold run finds a cut; a found cut of value v
  // moves the upper end straight to v - 1.
  if (ctx.delta >= 2 && probe(ctx.delta - 1)) {
    Capacity lo = 1, hi = out.value - 1;
    while (lo <= hi) {
      const Capacity mid = lo + (hi - lo) / 2;
      if (probe(mid))
        hi = out.value - 1;
      else
        lo = mid + 1;
    }
  }
  return finish();
}

}  // namespace cutq

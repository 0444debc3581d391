#include "cutq/harness.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>
#include <boost/graph/one_bit_color_map.hpp>
#include <boost/graph/stoer_wagner_min_cut.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "cutq/maxflow.hpp"
#include "cutq/mincut.hpp"
#include "cutq/oracle.hpp"
#include "cutq/view.hpp"

namespace cutq {

namespace {

const std::vector<std::pair<Family, const char*>> kFamilies = {
    {Family::random_gnp, "random_gnp"},   {Family::barbell, "barbell"},
    {Family::two_cliques_bridge, "two_cliques_bridge"}, {Family::path, "path"},
    {Family::star, "star"},               {Family::complete, "complete"},
    {Family::expander_like, "expander_like"}, {Family::planted_cut, "planted_cut"},
};

// Portable draws: the standard distributions differ between library vendors.
class Rng {
 public:
  explicit Rng(const InstanceSpec& s) {
    std::seed_seq seq{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
                      static_cast<std::uint32_t>(s.family), static_cast<std::uint32_t>(s.n)};
    gen_.seed(seq);
  }
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = gen_(); while (x >= limit);
    return x % bound;
  }
  bool coin(double p) { return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p; }
  std::vector<Vertex> permutation(Vertex n) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (Vertex i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (Vertex i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[below(static_cast<std::uint64_t>(i) + 1)]);
    return perm;
  }

 private:
  std::mt19937_64 gen_;
};

using Pairs = std::set<std::pair<Vertex, Vertex>>;

void link(Pairs& e, Vertex u, Vertex v) {
  if (u != v) e.emplace(std::min(u, v), std::max(u, v));
}

void clique(Pairs& e, Vertex lo, Vertex hi) {
  for (Vertex u = lo; u < hi; ++u)
    for (Vertex v = u + 1; v < hi; ++v) link(e, u, v);
}

void gnp(Pairs& e, Rng& rng, Vertex lo, Vertex hi, double p) {
  for (Vertex u = lo; u < hi; ++u)
    for (Vertex v = u + 1; v < hi; ++v)
      if (rng.coin(p)) link(e, u, v);
}

void cycle(Pairs& e, Vertex lo, Vertex hi) {
  for (Vertex u = lo; u + 1 < hi; ++u) link(e, u, u + 1);
  if (hi - lo >= 3) link(e, lo, hi - 1);
}

VertexSet side_of_mask(std::uint64_t mask, Vertex n) {
  VertexSet side;
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1) side.push_back(v);
  return side;
}

// Component of vertex 0, or nothing when g is connected.
std::optional<VertexSet> split_component(const GraphInstance& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (auto [v, w] : g.neighbors(u))
      if (!seen[static_cast<std::size_t>(v)]) seen[static_cast<std::size_t>(v)] = 1, stack.push_back(v);
  }
  VertexSet comp, rest;
  for (Vertex v = 0; v < g.n(); ++v) (seen[static_cast<std::size_t>(v)] ? comp : rest).push_back(v);
  if (rest.empty()) return std::nullopt;
  return seen[static_cast<std::size_t>(g.n() - 1)] ? rest : comp;
}

}  // namespace

const char* to_string(Family f) {
  for (const auto& [fam, name] : kFamilies)
    if (fam == f) return name;
  return "?";
}

Family family_named(const std::string& name) {
  for (const auto& [fam, n] : kFamilies)
    if (name == n) return fam;
  throw InputError("unknown family: " + name);
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> v;
    for (const auto& [fam, name] : kFamilies) v.push_back(fam);
    return v;
  }();
  return all;
}

std::string InstanceSpec::label() const {
  std::ostringstream s;
  s << to_string(family) << "_n" << n << "_s" << seed;
  if (p > 0) s << "_p" << p;
  if (clique > 0) s << "_c" << clique;
  if (degree > 0) s << "_d" << degree;
  if (family == Family::planted_cut) s << "_k" << planted;
  if (max_w > 1) s << "_w" << max_w;
  return s.str();
}

GraphInstance generate(const InstanceSpec& spec) {
  const Vertex n = spec.n;
  require(n >= 1, "instance needs n >= 1");
  require(spec.max_w >= 1, "max_w must be >= 1");
  require(spec.p >= 0 && spec.p <= 1, "p must lie in [0, 1]");
  Rng rng(spec);
  Pairs e;
  switch (spec.family) {
    case Family::random_gnp:
      gnp(e, rng, 0, n, spec.p > 0 ? spec.p : 0.5);
      break;
    case Family::barbell: {
      const Vertex c = spec.clique > 0 ? spec.clique : std::max<Vertex>(2, n / 3);
      require(2 * c <= n, "barbell cliques do not fit in n vertices");
      clique(e, 0, c);
      clique(e, n - c, n);
      for (Vertex u = c - 1; u < n - c; ++u) link(e, u, u + 1);
      break;
    }
    case Family::two_cliques_bridge: {
      require(n >= 2, "two_cliques_bridge needs n >= 2");
      const Vertex k = n / 2;
      clique(e, 0, k);
      clique(e, k, n);
      link(e, k - 1, k);
      break;
    }
    case Family::path:
      for (Vertex u = 0; u + 1 < n; ++u) link(e, u, u + 1);
      break;
    case Family::star:
      for (Vertex u = 1; u < n; ++u) link(e, 0, u);
      break;
    case Family::complete:
      clique(e, 0, n);
      break;
    case Family::expander_like: {
      const int d = spec.degree > 0 ? spec.degree : 4;
      require(d >= 2 && d < n, "expander_like needs 2 <= degree < n");
      // Union of random Hamiltonian cycles; repeated pairs collapse.
      for (int c = 0; c < (d + 1) / 2; ++c) {
        const auto perm = rng.permutation(n);
        for (Vertex i = 0; i < n; ++i) link(e, perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>((i + 1) % n)]);
      }
      break;
    }
    case Family::planted_cut: {
      require(n >= 2, "planted_cut needs n >= 2");
      const Vertex h = n / 2;
      const Capacity across = static_cast<Capacity>(h) * (n - h);
      require(spec.planted >= 0 && spec.planted <= across, "planted cut larger than the bipartition allows");
      const double p = spec.p > 0 ? spec.p : 0.8;
      cycle(e, 0, h);
      cycle(e, h, n);
      gnp(e, rng, 0, h, p);
      gnp(e, rng, h, n, p);
      Pairs cross;
      while (static_cast<Capacity>(cross.size()) < spec.planted) {
        const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(h)));
        const auto v = h + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - h)));
        cross.emplace(u, v);
      }
      e.insert(cross.begin(), cross.end());
      break;
    }
  }
  GraphInstance g(n);
  for (auto [u, v] : e) {
    const Capacity w = spec.max_w > 1 ? 1 + static_cast<Capacity>(rng.below(static_cast<std::uint64_t>(spec.max_w))) : 1;
    g.add_edge(u, v, w);
  }
  return g;
}

DenseMatrix dense_matrix(const GraphInstance& g) {
  DenseMatrix w(static_cast<std::size_t>(g.n()), std::vector<Capacity>(static_cast<std::size_t>(g.n()), 0));
  for (const Edge& e : g.edges()) {
    w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = e.w;
    w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = e.w;
  }
  return w;
}

ReferenceCut exhaustive_mincut(const GraphInstance& g) {
  const Vertex n = g.n();
  require(n >= 2, "min cut needs n >= 2");
  const auto cuts = all_cut_values(dense_matrix(g));
  // Masks below 2^(n-1) are exactly the sides without n-1.
  std::uint64_t best = 1;
  for (std::uint64_t mask = 2; mask < (std::uint64_t{1} << (n - 1)); ++mask)
    if (cuts[mask] < cuts[best]) best = mask;
  return {cuts[best], side_of_mask(best, n)};
}

ReferenceCut stoer_wagner_mincut(const GraphInstance& g) {
  const Vertex n = g.n();
  require(n >= 2, "min cut needs n >= 2");
  if (auto comp = split_component(g)) return {0, *comp};
  using Weight = boost::property<boost::edge_weight_t, Capacity>;
  using UGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property, Weight>;
  UGraph ug(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), e.w, ug);
  auto parity = boost::make_one_bit_color_map(boost::num_vertices(ug), boost::get(boost::vertex_index, ug));
  const Capacity value = boost::stoer_wagner_min_cut(ug, boost::get(boost::edge_weight, ug), boost::parity_map(parity));
  const bool far = boost::get(parity, static_cast<std::size_t>(n - 1));
  VertexSet side;
  for (Vertex v = 0; v < n; ++v)
    if (boost::get(parity, static_cast<std::size_t>(v)) != far) side.push_back(v);
  return {value, side};
}

ReferenceCut reference_mincut(const GraphInstance& g) {
  return g.n() <= kSeparationLimit ? exhaustive_mincut(g) : stoer_wagner_mincut(g);
}

Capacity reference_maxflow(const GraphInstance& g, Vertex s, Vertex t) {
  require(s != t, "source equals sink");
  require(s >= 0 && s < g.n() && t >= 0 && t < g.n(), "terminal out of range");
  using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
  using Props = boost::property<boost::edge_capacity_t, Capacity,
                boost::property<boost::edge_residual_capacity_t, Capacity,
                boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>;
  using DGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS, boost::no_property, Props>;
  DGraph dg(static_cast<std::size_t>(g.n()));
  auto cap = boost::get(boost::edge_capacity, dg);
  auto rev = boost::get(boost::edge_reverse, dg);
  auto arc = [&](Vertex u, Vertex v, Capacity w) {
    auto a = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), dg).first;
    auto b = boost::add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(u), dg).first;
    cap[a] = w;
    cap[b] = 0;
    rev[a] = b;
    rev[b] = a;
  };
  for (const Edge& e : g.edges()) {
    arc(e.u, e.v, e.w);
    arc(e.v, e.u, e.w);
  }
  return boost::edmonds_karp_max_flow(dg, static_cast<std::size_t>(s), static_cast<std::size_t>(t));
}

bool separation_check(const GraphInstance& g, const VertexSet& R, Capacity c) {
  const Vertex n = g.n();
  require(n <= kSeparationLimit, "separation_check is exhaustive and needs n <= 18");
  if (n < 2) return true;
  const auto cuts = all_cut_values(dense_matrix(g));
  std::uint64_t rmask = 0;
  for (Vertex r : R) rmask |= std::uint64_t{1} << r;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    if (cuts[mask] > c) continue;
    if ((mask & rmask) == 0 || (rmask & ~mask) == 0) return false;
  }
  return true;
}

bool expands_exhaustive(const GraphInstance& g, const VertexSet& part, const VertexSet& core, double factor) {
  const auto k = part.size();
  require(k <= static_cast<std::size_t>(kExhaustiveLimit), "part too large for exhaustive expansion check");
  if (k < 2) return true;
  DenseMatrix sub(k, std::vector<Capacity>(k, 0));
  std::uint64_t core_mask = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) sub[i][j] = g.capacity(part[i], part[j]);
    if (contains(core, part[i])) core_mask |= std::uint64_t{1} << i;
  }
  const auto cuts = all_cut_values(sub);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
    const int in = std::popcount(mask & core_mask), out = std::popcount(core_mask & ~mask);
    if (static_cast<double>(cuts[mask]) < factor * std::min(in, out) - 1e-9) return false;
  }
  return true;
}

const char* to_string(Algorithm a) { return a == Algorithm::mincut ? "mincut" : "maxflow"; }

Algorithm algorithm_named(const std::string& name) {
  if (name == "mincut") return Algorithm::mincut;
  if (name == "maxflow") return Algorithm::maxflow;
  throw InputError("unknown algorithm: " + name);
}

namespace {

struct Outcome {
  Capacity answer = 0;
  VertexSet side;
  int rounds = 0;
};

Outcome execute(Oracle& oracle, Algorithm algo, const Config& cfg) {
  OracleView view = OracleView::base(oracle);
  const Vertex n = oracle.n();
  require(n >= 2, "experiments need n >= 2");
  if (algo == Algorithm::mincut) {
    auto r = global_mincut(view, cfg);
    return {r.value, r.side, static_cast<int>(r.probes.size())};
  }
  auto r = dinitz_maxflow(view, 0, n - 1);
  return {r.value, r.mincut_source_side, r.rounds};
}

}  // namespace

RowRun run_instance(const GraphInstance& g, Algorithm algo, const Config& cfg, bool with_reference) {
  RowRun out;
  ExperimentRow& row = out.row;
  row.n = g.n();
  row.m = g.m();
  row.algorithm = to_string(algo);
  row.profile = cfg.profile;

  Oracle oracle(g, {.memoize = true, .record_transcript = true});
  const auto start = std::chrono::steady_clock::now();
  Outcome res = execute(oracle, algo, cfg);
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  row.answer = res.answer;
  row.rounds = res.rounds;
  row.cut_queries = oracle.ledger().cut_count();
  row.bis_queries = oracle.ledger().bis_count();
  out.side = std::move(res.side);
  out.transcript = oracle.ledger().transcript();
  if (with_reference) {
    row.reference_answer = algo == Algorithm::mincut ? reference_mincut(g).value : reference_maxflow(g, 0, g.n() - 1);
  }
  return out;
}

RowRun run_row(const InstanceSpec& spec, Algorithm algo, const Config& cfg, bool with_reference) {
  RowRun out = run_instance(generate(spec), algo, cfg, with_reference);
  out.row.family = to_string(spec.family);
  out.row.seed = spec.seed;
  return out;
}

Capacity replay_row(const InstanceSpec& spec, Algorithm algo, const Config& cfg,
                    const std::vector<TranscriptRecord>& transcript) {
  const GraphInstance g = generate(spec);
  Oracle oracle(g.n(), g.max_capacity(), transcript, {.memoize = true, .record_transcript = false});
  const Capacity answer = execute(oracle, algo, cfg).answer;
  ensure(oracle.script_remaining() == 0, "replay left transcript records unused");
  return answer;
}

std::string transcript_filename(const InstanceSpec& spec, Algorithm algo) {
  return spec.label() + "_" + to_string(algo) + ".jsonl";
}

namespace {

void write_transcript_file(const std::filesystem::path& path, const std::vector<TranscriptRecord>& records) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write " + path.string());
  QueryLedger::write_records(out, records);
}

}  // namespace

SuiteResult run_suite(const std::vector<InstanceSpec>& specs, const std::vector<Algorithm>& algos,
                      const Config& cfg, const SuiteOptions& opts) {
  SuiteResult out;
  if (opts.transcript_dir) std::filesystem::create_directories(*opts.transcript_dir);
  for (const auto& spec : specs) {
    for (Algorithm algo : algos) {
      RowRun run = run_row(spec, algo, cfg, opts.with_reference);
      if (opts.transcript_dir) write_transcript_file(*opts.transcript_dir / transcript_filename(spec, algo), run.transcript);
      if (run.row.reference_answer && *run.row.reference_answer != run.row.answer) {
        const auto dir = opts.diagnostic_dir / (spec.label() + "_" + to_string(algo));
        std::filesystem::create_directories(dir);
        generate(spec).save((dir / "instance.graph").string());
        write_transcript_file(dir / "transcript.jsonl", run.transcript);
        std::ofstream row(dir / "row.csv");
        write_csv(row, {run.row});
        throw SuiteFailure(spec.label() + " " + to_string(algo) + ": answer " + std::to_string(run.row.answer) +
                               " != reference " + std::to_string(*run.row.reference_answer),
                           dir);
      }
      out.rows.push_back(std::move(run.row));
    }
  }
  out.scaling = scaling_fits(out.rows);
  return out;
}

std::vector<ScalingFit> scaling_fits(const std::vector<ExperimentRow>& rows) {
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<double, double>>> points;
  for (const auto& r : rows)
    if (r.cut_queries > 0 && r.n > 1)
      points[{r.family, r.algorithm}].emplace_back(std::log(static_cast<double>(r.n)),
                                                    std::log(static_cast<double>(r.cut_queries)));
  std::vector<ScalingFit> fits;
  for (const auto& [key, pts] : points) {
    double mx = 0, my = 0;
    for (auto [x, y] : pts) mx += x, my += y;
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (auto [x, y] : pts) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
    if (sxx == 0) continue;
    fits.push_back({key.first, key.second, sxy / sxx, pts.size()});
  }
  return fits;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows, bool with_wall) {
  out << "family,n,m,seed,algorithm,answer,reference_answer,cut_queries,bis_queries,rounds,wall_ms,profile\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.algorithm << ',' << r.answer << ',';
    if (r.reference_answer) out << *r.reference_answer;
    out << ',' << r.cut_queries << ',' << r.bis_queries << ',' << r.rounds << ',';
    if (with_wall) out << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat;
    out << ',' << r.profile << '\n';
  }
}

void write_scaling(std::ostream& out, const std::vector<ScalingFit>& fits) {
  out << "family,algorithm,points,slope\n";
  for (const auto& f : fits)
    out << f.family << ',' << f.algorithm << ',' << f.points << ',' << std::fixed << std::setprecision(4) << f.slope
        << std::defaultfloat << '\n';
}

}  // namespace cutq

// Command-line front end for the cut-query library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cutq/config.hpp"
#include "cutq/expander.hpp"
#include "cutq/harness.hpp"
#include "cutq/isolating.hpp"
#include "cutq/maxflow.hpp"
#include "cutq/mincut.hpp"
#include "cutq/oracle.hpp"
#include "cutq/view.hpp"

using namespace cutq;

namespace {

std::string join(const VertexSet& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  return out.str();
}

void print_ledger(const QueryLedger& l) {
  std::cout << "cut_queries " << l.cut_count() << "\n"
            << "bis_queries " << l.bis_count() << "\n"
            << "memo_hits " << l.memo_hit_count() << "\n";
}

void save_transcript(const std::string& path, const QueryLedger& l) {
  if (path.empty()) return;
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write " + path);
  l.write_transcript(out);
}

VertexSet terminal_set(const std::vector<Vertex>& ids, Vertex n) {
  for (Vertex v : ids) require(v >= 0 && v < n, "terminal out of range: " + std::to_string(v));
  return canonical(ids);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutq: cut-query algorithms on a hidden graph"};
  app.require_subcommand(1);

  std::string config_file, profile;
  app.add_option("--config", config_file, "key=value file of tuning constants")->check(CLI::ExistingFile);

  auto load = [&]() {
    std::string text;
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    if (!profile.empty()) text += "\nprofile=" + profile + "\n";
    return parse_config(text);
  };

  std::string graph_file, transcript_out, csv_out;
  Vertex source = 0, sink = 0;
  Capacity tau = 0;
  double phi = 0;
  std::vector<Vertex> terminals;

  auto* maxflow = app.add_subcommand("maxflow", "s-t max-flow with Dinitz's algorithm");
  maxflow->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);
  maxflow->add_option("--source", source)->required();
  maxflow->add_option("--sink", sink)->required();
  maxflow->add_option("--transcript", transcript_out);

  auto* isocuts = app.add_subcommand("isocuts", "minimum isolating cuts of a terminal set");
  isocuts->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);
  isocuts->add_option("--terminals", terminals)->required()->delimiter(',');
  isocuts->add_option("--tau", tau)->required();

  auto* expdecomp = app.add_subcommand("expdecomp", "terminal expander decomposition");
  expdecomp->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);
  expdecomp->add_option("--terminals", terminals)->required()->delimiter(',');
  expdecomp->add_option("--tau", tau)->required();
  expdecomp->add_option("--phi", phi)->required();
  expdecomp->add_option("--profile", profile)->check(CLI::IsMember({"paper", "desk"}));

  auto* mincut = app.add_subcommand("mincut", "global minimum cut of an unweighted graph");
  mincut->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);
  mincut->add_option("--profile", profile)->check(CLI::IsMember({"paper", "desk"}));
  mincut->add_option("--transcript", transcript_out);
  mincut->add_option("--csv", csv_out);

  auto* domset = app.add_subcommand("domset", "dominating set from cut queries");
  domset->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);

  std::vector<std::string> families, algos;
  std::vector<Vertex> sizes;
  std::vector<std::uint64_t> seeds;
  std::string transcript_dir;
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("--families", families)->required()->delimiter(',');
  bench->add_option("--sizes", sizes)->required()->delimiter(',');
  bench->add_option("--seeds", seeds)->delimiter(',')->default_str("0");
  bench->add_option("--algos", algos)->delimiter(',')->default_str("mincut");
  bench->add_option("--profile", profile)->check(CLI::IsMember({"paper", "desk"}));
  bench->add_option("--csv", csv_out)->required();
  bench->add_option("--transcripts", transcript_dir);

  std::string algo_name = "mincut";
  auto* verify = app.add_subcommand("verify", "cross-check one graph against the reference");
  verify->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);
  verify->add_option("--algo", algo_name)->check(CLI::IsMember({"mincut", "maxflow"}));

  std::string transcript_in;
  auto* replay = app.add_subcommand("replay", "re-ask a transcript against a graph");
  replay->add_option("--graph", graph_file)->required()->check(CLI::ExistingFile);
  replay->add_option("--transcript", transcript_in)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bench) {
      const Config cfg = load();
      if (seeds.empty()) seeds = {0};
      if (algos.empty()) algos = {"mincut"};
      std::vector<InstanceSpec> specs;
      for (const auto& f : families)
        for (Vertex n : sizes)
          for (auto seed : seeds) {
            InstanceSpec s;
            s.family = family_named(f);
            s.n = n;
            s.seed = seed;
            specs.push_back(s);
          }
      std::vector<Algorithm> run;
      for (const auto& a : algos) run.push_back(algorithm_named(a));
      SuiteOptions opts;
      if (!transcript_dir.empty()) opts.transcript_dir = transcript_dir;
      const SuiteResult res = run_suite(specs, run, cfg, opts);
      std::ofstream out(csv_out);
      require(static_cast<bool>(out), "cannot write " + csv_out);
      write_csv(out, res.rows);
      write_scaling(std::cout, res.scaling);
      return 0;
    }

    const GraphInstance g = GraphInstance::load(graph_file);

    if (*replay) {
      std::ifstream in(transcript_in);
      const auto records = QueryLedger::read_transcript(in);
      const ReplayResult r = replay_transcript(g, records);
      std::cout << "records " << records.size() << "\nmismatches " << r.mismatches << "\n";
      if (r.mismatches) std::cout << "first_mismatch " << r.first_mismatch << "\n";
      return r.mismatches ? 1 : 0;
    }

    if (*verify) {
      const RowRun run = run_instance(g, algorithm_named(algo_name), load());
      std::cout << "answer " << run.row.answer << "\nreference " << *run.row.reference_answer << "\n"
                << "cut_queries " << run.row.cut_queries << "\n";
      const bool ok = run.row.answer == *run.row.reference_answer;
      std::cout << (ok ? "ok" : "MISMATCH") << "\n";
      return ok ? 0 : 1;
    }

    Oracle oracle(g, {.memoize = true, .record_transcript = !transcript_out.empty()});
    OracleView view = OracleView::base(oracle);

    if (*maxflow) {
      require(source >= 0 && source < g.n() && sink >= 0 && sink < g.n(), "terminal out of range");
      const FlowResult r = dinitz_maxflow(view, source, sink);
      std::cout << "value " << r.value << "\n"
                << "cut " << join(r.mincut_source_side) << "\n"
                << "rounds " << r.rounds << "\n";
      for (const auto& rec : r.round_log)
        std::cout << "round d=" << rec.d << " value=" << rec.value << " cuts=" << rec.cut_queries << "\n";
      print_ledger(oracle.ledger());
      save_transcript(transcript_out, oracle.ledger());
    } else if (*isocuts) {
      const IsolatingResult r = isolating_cuts(view, terminal_set(terminals, g.n()), tau);
      std::cout << "found " << (r.found ? "yes" : "no") << "\n";
      if (r.best) std::cout << "best " << *r.best << " " << r.record(*r.best).lambda << "\n";
      for (const auto& rec : r.records) {
        std::cout << "terminal " << rec.r << " ";
        if (rec.lambda == kInfinity) std::cout << "none\n";
        else std::cout << rec.lambda << " side " << join(*rec.side) << "\n";
      }
      print_ledger(oracle.ledger());
    } else if (*expdecomp) {
      Config cfg = load();
      cfg.phi = phi;
      const Decomposition d = decompose(view, terminal_set(terminals, g.n()), tau, cfg);
      std::cout << "parts " << d.parts.size() << "\ncrossing " << d.crossing.size() << "\n";
      for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const auto& p = d.parts[i];
        std::cout << "part " << i << " class " << to_string(p.cls) << " certified " << (p.certified ? "yes" : "no")
                  << "\n  V " << join(p.V) << "\n  core " << join(p.core) << "\n";
      }
      print_ledger(oracle.ledger());
    } else if (*mincut) {
      const Config cfg = load();
      const MinCutAnswer r = global_mincut(view, cfg);
      std::cout << "value " << r.value << "\nside " << join(r.side) << "\n"
                << "certificate " << to_string(r.certificate) << "\n";
      print_ledger(oracle.ledger());
      save_transcript(transcript_out, oracle.ledger());
      if (!csv_out.empty()) {
        ExperimentRow row;
        row.family = "file";
        row.n = g.n();
        row.m = g.m();
        row.algorithm = "mincut";
        row.answer = r.value;
        row.cut_queries = oracle.ledger().cut_count();
        row.bis_queries = oracle.ledger().bis_count();
        row.rounds = static_cast<int>(r.probes.size());
        row.profile = cfg.profile;
        std::ofstream out(csv_out);
        require(static_cast<bool>(out), "cannot write " + csv_out);
        write_csv(out, {row}, false);
      }
    } else if (*domset) {
      const VertexSet R = dominating_set(view);
      std::cout << "size " << R.size() << "\nset " << join(R) << "\n";
      print_ledger(oracle.ledger());
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SuiteFailure& e) {
    std::cerr << "suite failed: " << e.what() << "\ndiagnostics in " << e.bundle().string() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cutq/common.hpp"

namespace cutq {

// Tunable constants. Zero means "derive from n" for the fields that say so.
// The paper profile uses the asymptotic expressions; the desk profile pins
// them to constants that are meaningful at n <= 10^4.
struct Config {
  std::string profile = "desk";

  double phi = 0.125;            // expansion parameter; paper: 1/log^10 n
  double beta_fraction = 0.0;    // beta = max(1, floor(beta_fraction*|R|)); paper: 1/log^5 n
  double theta_core = 0.5;       // allowed core loss; paper: 1/log n
  double markov_fraction = 0.1;  // fake/pruned edge allowance per terminal, times (tau+1)
  double phi_x = 0.0;            // pruning conductance; 0: 1/(6 ln n + 6)
  double zeta = 0.5;             // required shrink of the terminal set per iteration
  int r_max = 0;                 // game rounds; 0: ceil(log2 slots) + 2
  int splitter_k = 0;            // 0: min(ceil(phi^-3 + phi^-1), floor(|R|/2))
  double splitter_exponent = 3.0;
  int cut_player_exhaustive_max = 20;
  int prune_exhaustive_max = 18;
  int certify_max_slots = 20;

  double domset_constant = 4.0;    // |R| <= C (n/delta) log2 n
  double crossing_constant = 8.0;  // crossing edges <= C phi |R| (tau+1) log^6 n
  double c1 = 1.574778;            // bfs_tree BIS <= c1 n log2 n, pinned from the acceptance run
  double c2 = 1.591519;            // dominating_set cuts <= c2 n log2 n, pinned likewise
  double budget_constant = 64.0;   // mincut cuts <= C n^{5/3} log2^k n
  double budget_log_power = 2.0;

  double phi_for(Vertex n) const;
  std::int64_t beta_for(std::size_t terminals, Vertex n) const;
  double theta_core_for(Vertex n) const;
  double phi_x_for(Vertex n) const;
  int rounds_for(std::size_t slots) const;

  void set(const std::string& key, const std::string& value);
  std::map<std::string, std::string> to_map() const;
};

Config desk_profile();
Config paper_profile();
Config profile_named(const std::string& name);

// key=value lines; '#' starts a comment. A `profile` key, if present, is
// applied first.
Config load_config(const std::string& path);
Config parse_config(const std::string& text);

}  // namespace cutq

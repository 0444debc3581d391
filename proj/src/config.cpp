#include "cutq/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "cutq/exhaustive.hpp"

namespace cutq {

namespace {

double log2n(Vertex n) { return std::log2(std::max<double>(n, 2)); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == v.size() && std::isfinite(x), "bad value for " + key + ": " + v);
  return x;
}

int to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  require(x == std::floor(x) && std::abs(x) < 1e9, "expected an integer for " + key + ": " + v);
  return static_cast<int>(x);
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

double Config::phi_for(Vertex n) const {
  if (profile == "paper") return 1.0 / std::pow(log2n(n), 10);
  return phi;
}

std::int64_t Config::beta_for(std::size_t terminals, Vertex n) const {
  const double frac = profile == "paper" ? 1.0 / std::pow(log2n(n), 5) : beta_fraction;
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(frac * static_cast<double>(terminals))));
}

double Config::theta_core_for(Vertex n) const {
  if (profile == "paper") return 1.0 / log2n(n);
  return theta_core;
}

double Config::phi_x_for(Vertex n) const {
  if (phi_x > 0) return phi_x;
  return 1.0 / (6.0 * std::log(std::max<double>(n, 2)) + 6.0);
}

int Config::rounds_for(std::size_t slots) const {
  if (r_max > 0) return r_max;
  return static_cast<int>(std::ceil(std::log2(std::max<double>(static_cast<double>(slots), 2)))) + 2;
}

void Config::set(const std::string& key, const std::string& value) {
  auto unit = [&](double x) {
    require(x > 0 && x <= 1, key + " must lie in (0,1]");
    return x;
  };
  if (key == "profile") {
    *this = profile_named(value);
  } else if (key == "phi") {
    phi = unit(to_double(key, value));
  } else if (key == "beta_fraction") {
    beta_fraction = to_double(key, value);
    require(beta_fraction >= 0 && beta_fraction < 0.5, "beta_fraction must lie in [0,0.5)");
  } else if (key == "theta_core") {
    theta_core = to_double(key, value);
    require(theta_core >= 0 && theta_core < 1, "theta_core must lie in [0,1)");
  } else if (key == "markov_fraction") {
    markov_fraction = to_double(key, value);
    require(markov_fraction >= 0, "markov_fraction must be non-negative");
  } else if (key == "phi_x") {
    phi_x = to_double(key, value);
    require(phi_x >= 0 && phi_x <= 1, "phi_x must lie in [0,1]");
  } else if (key == "zeta") {
    zeta = unit(to_double(key, value));
  } else if (key == "r_max") {
    r_max = to_int(key, value);
    require(r_max >= 0, "r_max must be non-negative");
  } else if (key == "splitter_k") {
    splitter_k = to_int(key, value);
    require(splitter_k >= 0, "splitter_k must be non-negative");
  } else if (key == "splitter_exponent") {
    splitter_exponent = to_double(key, value);
  } else if (key == "cut_player_exhaustive_max") {
    cut_player_exhaustive_max = to_int(key, value);
    require(cut_player_exhaustive_max >= 0 && cut_player_exhaustive_max <= kExhaustiveLimit, "cut_player_exhaustive_max must lie in [0,22]");
  } else if (key == "prune_exhaustive_max") {
    prune_exhaustive_max = to_int(key, value);
    require(prune_exhaustive_max >= 0 && prune_exhaustive_max <= kExhaustiveLimit, "prune_exhaustive_max must lie in [0,22]");
  } else if (key == "certify_max_slots") {
    certify_max_slots = to_int(key, value);
    require(certify_max_slots >= 0 && certify_max_slots <= kExhaustiveLimit, "certify_max_slots must lie in [0,22]");
  } else if (key == "domset_constant") {
    domset_constant = to_double(key, value);
  } else if (key == "crossing_constant") {
    crossing_constant = to_double(key, value);
  } else if (key == "c1") {
    c1 = to_double(key, value);
  } else if (key == "c2") {
    c2 = to_double(key, value);
  } else if (key == "budget_constant") {
    budget_constant = to_double(key, value);
  } else if (key == "budget_log_power") {
    budget_log_power = to_double(key, value);
  } else {
    throw InputError("unknown config key: " + key);
  }
}

std::map<std::string, std::string> Config::to_map() const {
  return {{"profile", profile},
          {"phi", fmt(phi)},
          {"beta_fraction", fmt(beta_fraction)},
          {"theta_core", fmt(theta_core)},
          {"markov_fraction", fmt(markov_fraction)},
          {"phi_x", fmt(phi_x)},
          {"zeta", fmt(zeta)},
          {"r_max", std::to_string(r_max)},
          {"splitter_k", std::to_string(splitter_k)},
          {"splitter_exponent", fmt(splitter_exponent)},
          {"cut_player_exhaustive_max", std::to_string(cut_player_exhaustive_max)},
          {"prune_exhaustive_max", std::to_string(prune_exhaustive_max)},
          {"certify_max_slots", std::to_string(certify_max_slots)},
          {"domset_constant", fmt(domset_constant)},
          {"crossing_constant", fmt(crossing_constant)},
          {"c1", fmt(c1)},
          {"c2", fmt(c2)},
          {"budget_constant", fmt(budget_constant)},
          {"budget_log_power", fmt(budget_log_power)}};
}

Config desk_profile() { return Config{}; }

Config paper_profile() {
  Config c;
  c.profile = "paper";
  c.theta_core = 0;
  return c;
}

Config profile_named(const std::string& name) {
  if (name == "desk") return desk_profile();
  if (name == "paper") return paper_profile();
  throw InputError("unknown profile: " + name);
}

Config parse_config(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, "config line " + std::to_string(lineno) + ": expected key=value");
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  Config c;
  for (const auto& [k, v] : entries)
    if (k == "profile") c.set(k, v);
  for (const auto& [k, v] : entries)
    if (k != "profile") c.set(k, v);
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace cutq

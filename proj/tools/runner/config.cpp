#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace isospec::cli {
namespace {

std::string normalized(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '-' || c == ' ') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(s)};
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(x)) {
    throw ConfigError(key + ": '" + v + "' is not a finite number");
  }
  return x;
}

long long parse_int(const std::string& key, const std::string& v) {
  char* end = nullptr;
  const long long x = std::strtoll(v.c_str(), &end, 10);
  if (v.empty() || end != v.c_str() + v.size()) {
    throw ConfigError(key + ": '" + v + "' is not an integer");
  }
  return x;
}

int parse_small_int(const std::string& key, const std::string& v) {
  const long long x = parse_int(key, v);
  if (x < -1000000000LL || x > 1000000000LL) {
    throw ConfigError(key + ": '" + v + "' is out of range");
  }
  return static_cast<int>(x);
}

bool parse_bool(const std::string& key, const std::string& v) {
  const std::string n = normalized(v);
  if (n == "true" || n == "1" || n == "yes" || n == "on") return true;
  if (n == "false" || n == "0" || n == "no" || n == "off") return false;
  throw ConfigError(key + ": '" + v + "' is not a boolean");
}

template <class E>
E parse_enum(std::string_view what, std::string_view s, const std::vector<E>& all) {
  std::vector<std::string> names;
  for (E e : all) {
    if (normalized(to_string(e)) == normalized(s)) return e;
    names.emplace_back(to_string(e));
  }
  std::string msg = "unknown " + std::string(what) + " '" + std::string(s) + "'";
  const std::string hint = suggest(s, names);
  if (!hint.empty()) msg += " (did you mean '" + hint + "'?)";
  throw ConfigError(msg);
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

}  // namespace

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::RigidBody: return "rigid_body";
    case Experiment::Brockett: return "brockett";
    case Experiment::SpinChain: return "spin_chain";
    case Experiment::PointVortex: return "point_vortex";
    case Experiment::Convergence: return "convergence";
    case Experiment::Bench: return "bench";
  }
  return "?";
}

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::MinimalMidpoint: return "minimal_midpoint";
    case Scheme::SphericalMidpoint: return "spherical_midpoint";
    case Scheme::ClassicalMidpoint: return "classical_midpoint";
    case Scheme::HyperbolicMidpoint: return "hyperbolic_midpoint";
  }
  return "?";
}

const std::vector<Experiment>& all_experiments() {
  static const std::vector<Experiment> v{Experiment::RigidBody,   Experiment::Brockett,
                                         Experiment::SpinChain,   Experiment::PointVortex,
                                         Experiment::Convergence, Experiment::Bench};
  return v;
}

const std::vector<Scheme>& all_schemes() {
  static const std::vector<Scheme> v{Scheme::MinimalMidpoint, Scheme::SphericalMidpoint,
                                     Scheme::ClassicalMidpoint, Scheme::HyperbolicMidpoint};
  return v;
}

Experiment parse_experiment(std::string_view s) {
  return parse_enum("experiment", s, all_experiments());
}

Scheme parse_scheme(std::string_view s) { return parse_enum("scheme", s, all_schemes()); }

SolverConfig ExperimentConfig::solver() const {
  SolverConfig c;
  c.method = method;
  c.tol = tol;
  c.max_iters = max_iters;
  c.newton_fd_step = newton_fd_step;
  if (method == SolverMethod::Newton && jacobian_reuse) {
    c.jacobian_cache = std::make_shared<JacobianCache>();
  }
  return c;
}

std::string suggest(std::string_view word, const std::vector<std::string>& candidates) {
  std::string best;
  std::size_t best_d = std::string::npos;
  const std::string w = normalized(word);
  for (const auto& c : candidates) {
    std::size_t d = edit_distance(w, normalized(c));
    // "spherical" should find "spherical_midpoint"
    if (const auto us = c.find('_'); us != std::string::npos) {
      d = std::min(d, edit_distance(w, normalized(c.substr(0, us))));
    }
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  const std::size_t limit = std::max<std::size_t>(2, w.size() / 3);
  return best_d <= limit ? best : std::string{};
}

KeyValues parse_config_text(std::string_view text) {
  KeyValues kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    kv.emplace_back(std::move(key), std::move(value));
  }
  return kv;
}

KeyValues read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "experiment", "scheme",        "h",           "t_final",          "method",
      "tol",        "max_iters",     "newton_fd_step", "jacobian_reuse", "seed",
      "n",          "n_particles",   "initial",     "h_list",           "reference_factor",
      "n_list",     "bench_steps",   "bench_schemes", "output_stride",  "timing",
      "output_dir"};
  return keys;
}

void apply(ExperimentConfig& cfg, const KeyValues& kv) {
  for (const auto& [raw_key, v] : kv) {
    std::string key = raw_key;
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "experiment") cfg.experiment = parse_experiment(v);
    else if (key == "scheme") cfg.scheme = parse_scheme(v);
    else if (key == "h") cfg.h = parse_double(key, v);
    else if (key == "t_final") cfg.t_final = parse_double(key, v);
    else if (key == "method") {
      const std::string m = normalized(v);
      if (m == "fixedpoint") cfg.method = SolverMethod::FixedPoint;
      else if (m == "newton") cfg.method = SolverMethod::Newton;
      else throw ConfigError("method: expected fixed_point or newton, got '" + v + "'");
    }
    else if (key == "tol") cfg.tol = parse_double(key, v);
    else if (key == "max_iters") cfg.max_iters = parse_small_int(key, v);
    else if (key == "newton_fd_step") cfg.newton_fd_step = parse_double(key, v);
    else if (key == "jacobian_reuse") cfg.jacobian_reuse = parse_bool(key, v);
    else if (key == "seed") {
      const long long s = parse_int(key, v);
      if (s < 0) throw ConfigError("seed must be non-negative");
      cfg.seed = static_cast<std::uint64_t>(s);
    }
    else if (key == "n") cfg.n = parse_small_int(key, v);
    else if (key == "n_particles") cfg.n_particles = parse_small_int(key, v);
    else if (key == "initial") cfg.initial = v;
    else if (key == "h_list") {
      cfg.h_list.clear();
      for (const auto& item : split_list(v)) cfg.h_list.push_back(parse_double(key, item));
    }
    else if (key == "reference_factor") cfg.reference_factor = parse_small_int(key, v);
    else if (key == "n_list") {
      cfg.n_list.clear();
      for (const auto& item : split_list(v)) cfg.n_list.push_back(parse_small_int(key, item));
    }
    else if (key == "bench_steps") cfg.bench_steps = parse_small_int(key, v);
    else if (key == "bench_schemes") {
      cfg.bench_schemes.clear();
      for (const auto& item : split_list(v)) cfg.bench_schemes.push_back(parse_scheme(item));
    }
    else if (key == "output_stride") cfg.output_stride = parse_small_int(key, v);
    else if (key == "timing") cfg.timing = parse_bool(key, v);
    else if (key == "output_dir") {
      if (v.empty()) throw ConfigError("output_dir is empty");
      cfg.output_dir = v;
    }
    else {
      std::string msg = "unknown key '" + raw_key + "'";
      const std::string hint = suggest(key, config_keys());
      if (!hint.empty()) msg += " (did you mean '" + hint + "'?)";
      throw ConfigError(msg);
    }
  }
}

void finalize(ExperimentConfig& cfg) {
  const auto fail = [](const std::string& m) { throw ConfigError(m); };
  const Experiment e = cfg.experiment;

  if (!cfg.scheme) {
    cfg.scheme = e == Experiment::PointVortex ? Scheme::HyperbolicMidpoint
                                              : Scheme::MinimalMidpoint;
  }
  const Scheme s = *cfg.scheme;
  const auto vec3_scheme = [](Scheme x) { return x != Scheme::HyperbolicMidpoint; };
  switch (e) {
    case Experiment::RigidBody:
    case Experiment::Brockett:
      if (s != Scheme::MinimalMidpoint) {
        fail(std::string(to_string(s)) + " does not apply to matrix experiment " +
             std::string(to_string(e)) + "; use minimal_midpoint");
      }
      break;
    case Experiment::SpinChain:
    case Experiment::Convergence:
      if (!vec3_scheme(s)) {
        fail("hyperbolic_midpoint needs the point_vortex experiment");
      }
      break;
    case Experiment::PointVortex:
      if (s != Scheme::HyperbolicMidpoint) {
        fail(std::string(to_string(s)) + " does not apply to point_vortex; use hyperbolic_midpoint");
      }
      break;
    case Experiment::Bench:
      if (cfg.bench_schemes.empty()) {
        cfg.bench_schemes = {Scheme::MinimalMidpoint, Scheme::SphericalMidpoint};
      }
      for (Scheme b : cfg.bench_schemes) {
        if (!vec3_scheme(b)) fail("bench runs spin chains; hyperbolic_midpoint is not allowed");
      }
      break;
  }

  if (!(cfg.h > 0.0)) fail("h must be > 0");
  if (!(cfg.t_final >= 0.0)) fail("t_final must be >= 0");
  if (!(cfg.tol > 0.0)) fail("tol must be > 0");
  if (cfg.max_iters < 1) fail("max_iters must be >= 1");
  if (!(cfg.newton_fd_step > 0.0)) fail("newton_fd_step must be > 0");
  if (cfg.output_stride < 1) fail("output_stride must be >= 1");

  const auto require_initial = [&](const std::vector<std::string>& allowed) {
    if (cfg.initial.empty()) {
      cfg.initial = allowed.front();
      return;
    }
    for (const auto& a : allowed)
      if (normalized(a) == normalized(cfg.initial)) {
        cfg.initial = a;
        return;
      }
    std::string msg = "initial '" + cfg.initial + "' is not valid for " +
                      std::string(to_string(e));
    const std::string hint = suggest(cfg.initial, allowed);
    if (!hint.empty()) msg += " (did you mean '" + hint + "'?)";
    fail(msg);
  };

  switch (e) {
    case Experiment::RigidBody:
      if (cfg.n < 2 || cfg.n % 2 != 0) fail("rigid body needs an even n >= 2");
      require_initial({"paper"});
      break;
    case Experiment::Brockett:
      if (cfg.n < 1) fail("n must be >= 1");
      require_initial({"random"});
      break;
    case Experiment::SpinChain:
      if (cfg.n_particles < 3) fail("n_particles must be >= 3");
      require_initial({"paper_curve", "random"});
      break;
    case Experiment::PointVortex:
      require_initial({"paper_w1", "paper_w2"});
      break;
    case Experiment::Convergence: {
      if (cfg.n_particles < 3) fail("n_particles must be >= 3");
      require_initial({"paper_curve", "random"});
      if (cfg.h_list.empty()) {
        for (int k = 0; k <= 10; ++k) cfg.h_list.push_back(std::pow(0.5, k));
      }
      if (cfg.h_list.size() < 3) fail("h_list needs at least three step sizes");
      if (!strictly_decreasing(cfg.h_list)) fail("h_list must be strictly decreasing");
      for (double h : cfg.h_list) {
        const double q = cfg.t_final / h;
        if (!(h > 0.0) || q < 1.0 - 1e-9 || std::abs(q - std::round(q)) > 1e-9 * q) {
          fail("every h in h_list must divide t_final");
        }
      }
      if (cfg.reference_factor < 1) fail("reference_factor must be >= 1");
      break;
    }
    case Experiment::Bench:
      require_initial({"random", "paper_curve"});
      if (cfg.n_list.empty()) cfg.n_list = {10, 50, 100, 200};
      for (int n : cfg.n_list)
        if (n < 3) fail("every entry of n_list must be >= 3");
      if (cfg.bench_steps < 1) fail("bench_steps must be >= 1");
      break;
  }
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["experiment"] = to_string(cfg.experiment);
  j["scheme"] = cfg.scheme ? nlohmann::json(to_string(*cfg.scheme)) : nlohmann::json();
  j["h"] = cfg.h;
  j["t_final"] = cfg.t_final;
  j["method"] = cfg.method == SolverMethod::Newton ? "newton" : "fixed_point";
  j["tol"] = cfg.tol;
  j["max_iters"] = cfg.max_iters;
  j["newton_fd_step"] = cfg.newton_fd_step;
  j["jacobian_reuse"] = cfg.jacobian_reuse;
  j["seed"] = cfg.seed;
  j["n"] = cfg.n;
  j["n_particles"] = cfg.n_particles;
  j["initial"] = cfg.initial;
  j["h_list"] = cfg.h_list;
  j["reference_factor"] = cfg.reference_factor;
  j["n_list"] = cfg.n_list;
  j["bench_steps"] = cfg.bench_steps;
  std::vector<std::string> bs;
  for (Scheme s : cfg.bench_schemes) bs.emplace_back(to_string(s));
  j["bench_schemes"] = bs;
  j["output_stride"] = cfg.output_stride;
  j["timing"] = cfg.timing;
  j["output_dir"] = cfg.output_dir.string();
  return j;
}

}  // namespace isospec::cli

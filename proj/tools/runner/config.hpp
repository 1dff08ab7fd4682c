#pragma once

#include <isospec/solver.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace isospec::cli {

enum class Experiment { RigidBody, Brockett, SpinChain, PointVortex, Convergence, Bench };
enum class Scheme { MinimalMidpoint, SphericalMidpoint, ClassicalMidpoint, HyperbolicMidpoint };

std::string_view to_string(Experiment e);
std::string_view to_string(Scheme s);
const std::vector<Experiment>& all_experiments();
const std::vector<Scheme>& all_schemes();

struct ExperimentConfig {
  Experiment experiment = Experiment::RigidBody;
  std::optional<Scheme> scheme;  // unset picks the experiment's default
  double h = 0.1;
  double t_final = 1.0;

  SolverMethod method = SolverMethod::FixedPoint;
  double tol = 1e-13;
  int max_iters = 100;
  double newton_fd_step = 1e-7;
  bool jacobian_reuse = true;  // Newton only

  std::uint64_t seed = 1;
  int n = 10;             // matrix dimension (rigid body, Brockett)
  int n_particles = 100;  // spin chain
  std::string initial;    // empty picks the experiment's default

  std::vector<double> h_list;  // convergence
  int reference_factor = 8;
  std::vector<int> n_list;     // bench
  int bench_steps = 100;
  std::vector<Scheme> bench_schemes;

  int output_stride = 1;
  bool timing = false;  // write timing.csv with per-step wall time
  std::filesystem::path output_dir = "out";

  SolverConfig solver() const;
};

/// Invalid configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// `key = value` lines; blank lines and `#` comments are skipped.
KeyValues parse_config_text(std::string_view text);
KeyValues read_config_file(const std::filesystem::path& path);

/// Every key accepted by apply().
const std::vector<std::string>& config_keys();

/// Applies key/value pairs in order (later pairs win).
void apply(ExperimentConfig& cfg, const KeyValues& kv);

/// Fills experiment-dependent defaults and checks ranges and scheme
/// compatibility.
void finalize(ExperimentConfig& cfg);

nlohmann::json to_json(const ExperimentConfig& cfg);

/// Closest candidate by edit distance, or empty when nothing is close.
std::string suggest(std::string_view word, const std::vector<std::string>& candidates);

Experiment parse_experiment(std::string_view s);
Scheme parse_scheme(std::string_view s);

}  // namespace isospec::cli

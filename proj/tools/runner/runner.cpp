#include "runner.hpp"

#include <isospec/diagnostics.hpp>
#include <isospec/error.hpp>
#include <isospec/scheme.hpp>
#include <isospec/sl2.hpp>
#include <isospec/systems.hpp>
#include <isospec/vec3.hpp>
#include <isospec/version.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>

#include "output.hpp"

namespace isospec::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

enum class ColumnKind { Drift, Value };

template <class State>
struct Setup {
  Stepper<State> stepper;
  State initial;
  std::vector<Observer<State>> observers;
  std::vector<ColumnKind> kinds;  // one per observed column
  std::vector<std::string> state_columns;
  std::function<std::vector<double>(const State&)> flatten;
  std::function<json(const TrajectoryRecord<State>&)> summary;  // may be empty
};

struct Artifacts {
  std::vector<fs::path> paths;
  json files = json::array();
  json observers = json::array();
  json solver = json::object();
  json summary = json::object();
  std::optional<json> failure;

  void add(const CsvWriter& w) {
    paths.push_back(w.path());
    files.push_back({{"name", w.path().filename().string()},
                     {"sha256", sha256_file(w.path())},
                     {"rows", w.rows()},
                     {"columns", w.header()}});
  }
};

std::string kind_name(ErrorKind k) { return std::string(isospec::to_string(k)); }

json solver_config_json(const ExperimentConfig& cfg) {
  return {{"method", cfg.method == SolverMethod::Newton ? "newton" : "fixed_point"},
          {"tol", cfg.tol},
          {"max_iters", cfg.max_iters},
          {"newton_fd_step", cfg.newton_fd_step},
          {"jacobian_reuse", cfg.method == SolverMethod::Newton && cfg.jacobian_reuse}};
}

json iteration_stats(const std::vector<int>& iters, const std::vector<double>& secs) {
  json j;
  long long total = 0;
  int worst = 0;
  for (int it : iters) {
    total += it;
    worst = std::max(worst, it);
  }
  double sum_s = 0.0, max_s = 0.0;
  for (double s : secs) {
    sum_s += s;
    max_s = std::max(max_s, s);
  }
  const double n = iters.empty() ? 1.0 : static_cast<double>(iters.size());
  j["steps"] = iters.size();
  j["total_iterations"] = total;
  j["max_iterations"] = worst;
  j["mean_iterations"] = static_cast<double>(total) / n;
  j["mean_step_seconds"] = sum_s / n;
  j["max_step_seconds"] = max_s;
  return j;
}

// Stepper factories --------------------------------------------------------

Stepper<SquareMatrix> matrix_stepper(FlowProblem p, SolverConfig sc) {
  return [p = std::move(p), sc = std::move(sc)](const SquareMatrix& w, double h) {
    StepReport r = step(p, w, h, sc);
    return StepOutcome<SquareMatrix>{std::move(r.w_next), r.iters};
  };
}

Stepper<ChainState> chain_stepper(Vec3Field f, Scheme s, SolverConfig sc) {
  using Fn = ChainStepReport (*)(const Vec3Field&, const ChainState&, double, const SolverConfig&);
  Fn fn = step_min_midpoint_r3;
  if (s == Scheme::SphericalMidpoint) fn = step_spherical_midpoint;
  if (s == Scheme::ClassicalMidpoint) fn = step_classical_midpoint;
  return [f = std::move(f), fn, sc = std::move(sc)](const ChainState& w, double h) {
    ChainStepReport r = fn(f, w, h, sc);
    return StepOutcome<ChainState>{std::move(r.w_next), r.iters};
  };
}

std::vector<std::string> matrix_columns(Eigen::Index n) {
  std::vector<std::string> c;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      c.push_back("w_" + std::to_string(i) + "_" + std::to_string(j));
  return c;
}

std::vector<double> flatten_matrix(const SquareMatrix& w) {
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(w.size()));
  for (Eigen::Index i = 0; i < w.rows(); ++i)
    for (Eigen::Index j = 0; j < w.cols(); ++j) v.push_back(w(i, j).real());
  return v;
}

std::vector<std::string> particle_columns(Eigen::Index n) {
  std::vector<std::string> c;
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::string k = std::to_string(i);
    c.insert(c.end(), {"x_" + k, "y_" + k, "z_" + k});
  }
  return c;
}

std::vector<double> flatten_particles(const Eigen::Matrix3Xd& w) {
  return {w.data(), w.data() + w.size()};
}

template <class State>
Observer<State> scalar(std::string name, std::function<double(const State&)> fn) {
  return {{std::move(name)},
          [fn = std::move(fn)](const State& s) { return std::vector<Complex>{fn(s)}; }};
}

template <class State>
Observer<State> spectrum_observer(Eigen::Index n, std::function<const SquareMatrix&(const State&)> get) {
  std::vector<std::string> names;
  for (Eigen::Index k = 0; k < n; ++k) names.push_back("eigenvalue_" + std::to_string(k));
  return {names, [get = std::move(get)](const State& s) {
            return spectrum_key(get(s)).eigenvalues;
          }};
}

// Recorded trajectories -----------------------------------------------------

template <class State>
Artifacts run_recorded(const ExperimentConfig& cfg, const Setup<State>& s) {
  const TrajectoryRecord<State> rec =
      run_trajectory<State>(s.stepper, s.initial, cfg.h, cfg.t_final, s.observers, true);
  Artifacts a;
  const std::size_t last = rec.times.size() - 1;
  const auto stride = static_cast<std::size_t>(cfg.output_stride);
  const auto keep = [&](std::size_t k) { return k % stride == 0 || k == last; };

  std::vector<std::string> header{"step", "time"};
  header.insert(header.end(), s.state_columns.begin(), s.state_columns.end());
  CsvWriter states(cfg.output_dir / "states.csv", header);
  for (std::size_t k = 0; k <= last; ++k) {
    if (!keep(k)) continue;
    std::vector<double> row{rec.times[k]};
    const auto flat = s.flatten(rec.states[k]);
    row.insert(row.end(), flat.begin(), flat.end());
    states.row({std::to_string(k)}, row);
  }
  states.close();
  a.add(states);

  header = {"time"};
  header.insert(header.end(), rec.columns.begin(), rec.columns.end());
  header.push_back("iterations");
  CsvWriter drifts(cfg.output_dir / "drifts.csv", header);
  for (std::size_t k = 0; k <= last; ++k) {
    if (!keep(k)) continue;
    std::vector<double> row{rec.times[k]};
    for (std::size_t c = 0; c < rec.columns.size(); ++c) {
      row.push_back(s.kinds[c] == ColumnKind::Drift ? rec.drifts[c].values[k]
                                                    : rec.samples[c][k].real());
    }
    row.push_back(k == 0 ? 0.0 : static_cast<double>(rec.iterations[k - 1]));
    drifts.row(row);
  }
  drifts.close();
  a.add(drifts);

  if (cfg.timing) {
    CsvWriter timing(cfg.output_dir / "timing.csv", {"step", "seconds"});
    for (std::size_t k = 0; k < rec.step_seconds.size(); ++k) {
      timing.row({std::to_string(k + 1)}, {rec.step_seconds[k]});
    }
    timing.close();
    a.add(timing);
  }

  for (std::size_t c = 0; c < rec.columns.size(); ++c) {
    a.observers.push_back(
        {{"name", rec.columns[c]}, {"kind", s.kinds[c] == ColumnKind::Drift ? "drift" : "value"}});
  }
  a.observers.push_back({{"name", "iterations"}, {"kind", "value"}});

  a.solver = solver_config_json(cfg);
  a.solver.update(iteration_stats(rec.iterations, rec.step_seconds));

  json max_drift = json::object();
  json halves = json::object();
  for (std::size_t c = 0; c < rec.columns.size(); ++c) {
    if (s.kinds[c] != ColumnKind::Drift) continue;
    max_drift[rec.columns[c]] = max_value(rec.drifts[c]);
    const auto [first, second] = half_span_drifts(rec.drifts[c]);
    halves[rec.columns[c]] = {first, second};
  }
  a.summary["max_drift"] = max_drift;
  a.summary["half_span_max_drift"] = halves;
  a.summary["final_time"] = rec.times.back();
  if (s.summary) a.summary.update(s.summary(rec));

  if (!rec.ok()) {
    a.failure = json{{"kind", kind_name(rec.failure->kind)},
                     {"step", rec.failure->step_index},
                     {"message", rec.failure->message}};
  }
  return a;
}

Artifacts run_rigid_body(const ExperimentConfig& cfg) {
  const RigidBodySpec spec{cfg.n};
  FlowProblem p = rigid_body_problem(spec);
  Setup<SquareMatrix> s;
  s.initial = rigid_body_initial_state(spec);
  s.observers.push_back(scalar<SquareMatrix>("hamiltonian", p.hamiltonian));
  s.observers.push_back(spectrum_observer<SquareMatrix>(cfg.n, [](const SquareMatrix& w) -> const SquareMatrix& { return w; }));
  s.kinds.assign(1 + static_cast<std::size_t>(cfg.n), ColumnKind::Drift);
  s.state_columns = matrix_columns(cfg.n);
  s.flatten = flatten_matrix;
  s.stepper = matrix_stepper(std::move(p), cfg.solver());
  return run_recorded(cfg, s);
}

Artifacts run_brockett(const ExperimentConfig& cfg) {
  BrockettSpec spec;
  spec.n = cfg.n;
  spec.seed = cfg.seed;
  spec.normalize();
  const SquareMatrix nm = spec.n_matrix;
  Setup<SquareMatrix> s;
  s.initial = brockett_initial_state(spec);
  s.observers.push_back(spectrum_observer<SquareMatrix>(cfg.n, [](const SquareMatrix& w) -> const SquareMatrix& { return w; }));
  s.observers.push_back(scalar<SquareMatrix>("off_diagonal_norm", off_diagonal_norm));
  s.observers.push_back(scalar<SquareMatrix>(
      "lyapunov_trace", [nm](const SquareMatrix& w) { return (nm * w).trace().real(); }));
  s.observers.push_back(scalar<SquareMatrix>(
      "diagonal_sorted", [nm](const SquareMatrix& w) { return diagonal_sorted_like(w, nm) ? 1.0 : 0.0; }));
  s.kinds.assign(static_cast<std::size_t>(cfg.n), ColumnKind::Drift);
  s.kinds.insert(s.kinds.end(), 3, ColumnKind::Value);
  s.state_columns = matrix_columns(cfg.n);
  s.flatten = flatten_matrix;
  s.summary = [nm](const TrajectoryRecord<SquareMatrix>& rec) {
    const SquareMatrix& final_state = rec.states.back();
    // Tr(N W) should not decrease along the flow; count steps where it does
    const std::size_t col = static_cast<std::size_t>(nm.rows()) + 1;
    int decreases = 0;
    for (std::size_t k = 1; k < rec.samples[col].size(); ++k) {
      if (rec.samples[col][k].real() < rec.samples[col][k - 1].real() - 1e-10) ++decreases;
    }
    return json{{"final_off_diagonal_norm", off_diagonal_norm(final_state)},
                {"final_diagonal_sorted", diagonal_sorted_like(final_state, nm)},
                {"lyapunov_trace_decreases", decreases}};
  };
  s.stepper = matrix_stepper(brockett_problem(spec), cfg.solver());
  return run_recorded(cfg, s);
}

ChainCurve curve_of(const std::string& initial) {
  return initial == "random" ? ChainCurve::Random : ChainCurve::PaperCurve;
}

Artifacts run_spin_chain(const ExperimentConfig& cfg) {
  const SpinChainSpec spec{cfg.n_particles, curve_of(cfg.initial), cfg.seed};
  Setup<ChainState> s;
  s.initial = spin_chain_initial_state(spec);
  const Eigen::RowVectorXd norms0 = s.initial.colwise().norm();
  s.observers.push_back(scalar<ChainState>("hamiltonian", spin_chain_hamiltonian));
  s.observers.push_back({{"total_spin_x", "total_spin_y", "total_spin_z"}, [](const ChainState& w) {
                           const Vec3 t = total_spin(w);
                           return std::vector<Complex>{t.x(), t.y(), t.z()};
                         }});
  s.observers.push_back(scalar<ChainState>("norm_drift_max", [norms0](const ChainState& w) {
    return (w.colwise().norm() - norms0).cwiseAbs().maxCoeff();
  }));
  s.kinds = {ColumnKind::Drift, ColumnKind::Drift, ColumnKind::Drift, ColumnKind::Drift,
             ColumnKind::Value};
  s.state_columns = particle_columns(cfg.n_particles);
  s.flatten = flatten_particles;
  s.summary = [](const TrajectoryRecord<ChainState>& rec) {
    double step_norm = 0.0;
    for (std::size_t k = 1; k < rec.states.size(); ++k) {
      step_norm = std::max(step_norm, (rec.states[k].colwise().norm() -
                                       rec.states[k - 1].colwise().norm()).cwiseAbs().maxCoeff());
    }
    return json{{"max_step_norm_change", step_norm}};
  };
  s.stepper = chain_stepper(spin_chain_field(spec), *cfg.scheme, cfg.solver());
  return run_recorded(cfg, s);
}

Artifacts run_point_vortex(const ExperimentConfig& cfg) {
  const PointVortexSpec spec = cfg.initial == "paper_w2" ? paper_w2() : paper_w1();
  const PointVortexSystem sys = point_vortex_field(spec);
  const Eigen::Index n = spec.positions.cols();
  Setup<HypChainState> s;
  s.initial = point_vortex_initial_state(spec);
  const Eigen::Matrix3Xd p0 = s.initial.particles;
  std::vector<std::string> casimirs;
  for (Eigen::Index i = 0; i < n; ++i) casimirs.push_back("casimir_" + std::to_string(i));
  s.observers.push_back({casimirs, [](const HypChainState& st) {
                           std::vector<Complex> v;
                           for (Eigen::Index i = 0; i < st.particles.cols(); ++i)
                             v.emplace_back(l_inner(st.particles.col(i), st.particles.col(i)));
                           return v;
                         }});
  s.observers.push_back(scalar<HypChainState>(
      "hamiltonian", [h = sys.hamiltonian](const HypChainState& st) { return h(st.particles); }));
  s.observers.push_back({{"momentum_x", "momentum_y", "momentum_z"},
                         [m = sys.momentum](const HypChainState& st) {
                           const Vec3 v = m(st.particles);
                           return std::vector<Complex>{v.x(), v.y(), v.z()};
                         }});
  s.observers.push_back(scalar<HypChainState>("excursion_max", [p0](const HypChainState& st) {
    return (st.particles - p0).colwise().norm().maxCoeff();
  }));
  s.kinds.assign(static_cast<std::size_t>(n) + 4, ColumnKind::Drift);
  s.kinds.push_back(ColumnKind::Value);
  s.state_columns = particle_columns(n);
  s.flatten = [](const HypChainState& st) { return flatten_particles(st.particles); };
  s.summary = [](const TrajectoryRecord<HypChainState>& rec) {
    const std::size_t col = rec.columns.size() - 1;
    double worst = 0.0;
    for (const auto& v : rec.samples[col]) worst = std::max(worst, v.real());
    return json{{"max_excursion", worst}};
  };
  s.stepper = [field = sys.field, sc = cfg.solver()](const HypChainState& st, double h) {
    HypStepReport r = step_hyperbolic_midpoint(field, st, h, sc);
    return StepOutcome<HypChainState>{std::move(r.next), r.iters};
  };
  return run_recorded(cfg, s);
}

Artifacts run_convergence(const ExperimentConfig& cfg) {
  const SpinChainSpec spec{cfg.n_particles, curve_of(cfg.initial), cfg.seed};
  const SolverConfig sc = cfg.solver();
  const auto stepper = chain_stepper(spin_chain_field(spec), *cfg.scheme, sc);
  const StateDistance<ChainState> dist = [](const ChainState& a, const ChainState& b) {
    return (a - b).norm();
  };
  Artifacts a;
  a.solver = solver_config_json(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const OrderEstimate est =
        estimate_order<ChainState>(stepper, spin_chain_initial_state(spec), cfg.t_final,
                                   cfg.h_list, FineStepReference{cfg.reference_factor}, dist);
    CsvWriter order(cfg.output_dir / "order.csv", {"h", "max_error"});
    for (std::size_t i = 0; i < est.step_sizes.size(); ++i) {
      order.row({est.step_sizes[i], est.max_errors[i]});
    }
    order.close();
    a.add(order);
    a.summary["fitted_slope"] = est.fitted_slope;
    a.summary["reference_step"] = cfg.h_list.back() / cfg.reference_factor;
  } catch (const Error& e) {
    a.failure = json{{"kind", kind_name(e.kind())}, {"message", e.what()}};
  }
  a.solver["seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (sc.jacobian_cache) a.solver["jacobian_refreshes"] = sc.jacobian_cache->refreshes();
  a.observers.push_back({{"name", "max_error"}, {"kind", "value"}});
  return a;
}

Artifacts run_bench(const ExperimentConfig& cfg) {
  const ChainCurve curve = curve_of(cfg.initial);
  const std::function<ChainState(int)> family = [curve, seed = cfg.seed](int n) {
    return spin_chain_initial_state(SpinChainSpec{n, curve, seed});
  };
  Artifacts a;
  a.solver = solver_config_json(cfg);
  CsvWriter bench(cfg.output_dir / "bench.csv", {"N", "seconds_per_step", "scheme"});
  json slopes = json::object();
  for (Scheme scheme : cfg.bench_schemes) {
    const auto stepper = chain_stepper(spin_chain_field(SpinChainSpec{3}), scheme, cfg.solver());
    std::vector<BenchRow> rows;
    try {
      rows = bench_cost(stepper, family, cfg.n_list, cfg.h, cfg.bench_steps);
    } catch (const Error& e) {
      a.failure = json{{"kind", kind_name(e.kind())},
                       {"scheme", to_string(scheme)},
                       {"message", e.what()}};
      break;
    }
    std::vector<double> ns, secs;
    for (const auto& r : rows) {
      bench.text_row({std::to_string(r.n), format_number(r.seconds_per_step),
                      std::string(to_string(scheme))});
      ns.push_back(r.n);
      secs.push_back(r.seconds_per_step);
    }
    if (rows.size() >= 2) {
      slopes[std::string(to_string(scheme))] = fit_loglog_slope(ns, secs, 0.0);
    }
  }
  bench.close();
  a.add(bench);
  a.summary["cost_slopes"] = slopes;
  a.observers.push_back({{"name", "seconds_per_step"}, {"kind", "value"}});
  return a;
}

Artifacts dispatch(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::RigidBody: return run_rigid_body(cfg);
    case Experiment::Brockett: return run_brockett(cfg);
    case Experiment::SpinChain: return run_spin_chain(cfg);
    case Experiment::PointVortex: return run_point_vortex(cfg);
    case Experiment::Convergence: return run_convergence(cfg);
    case Experiment::Bench: return run_bench(cfg);
  }
  throw ConfigError("unhandled experiment");
}

RunResult fail(int code, std::string category, std::string message) {
  RunResult r;
  r.exit_code = code;
  r.category = std::move(category);
  r.message = std::move(message);
  return r;
}

}  // namespace

RunResult run(ExperimentConfig cfg) {
  const std::string started = utc_timestamp();
  try {
    finalize(cfg);
  } catch (const ConfigError& e) {
    return fail(kExitConfig, "config_error", e.what());
  }

  try {
    ensure_directory(cfg.output_dir);
    Artifacts a = dispatch(cfg);

    json manifest;
    manifest["tool"] = "isospec";
    manifest["version"] = kVersion;
    manifest["config"] = to_json(cfg);
    manifest["started_at"] = started;
    manifest["finished_at"] = utc_timestamp();
    manifest["status"] = a.failure ? "solver_failure" : "ok";
    if (a.failure) manifest["error"] = *a.failure;
    manifest["observers"] = a.observers;
    manifest["files"] = a.files;
    manifest["solver"] = a.solver;
    manifest["summary"] = a.summary;

    RunResult r;
    r.files = a.paths;
    r.manifest = cfg.output_dir / "manifest.json";
    write_text_file(r.manifest, manifest.dump(2) + "\n");
    if (a.failure) {
      r.exit_code = kExitSolver;
      r.category = "solver_failure";
      r.message = (*a.failure)["kind"].get<std::string>() + ": " +
                  (*a.failure)["message"].get<std::string>();
    }
    return r;
  } catch (const IoError& e) {
    return fail(kExitIo, "io_error", e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::DimensionMismatch) {
      return fail(kExitConfig, "config_error", e.what());
    }
    return fail(kExitSolver, "solver_failure", kind_name(e.kind()) + ": " + e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kExitIo, "io_error", e.what());
  }
}

std::string list_experiments(const std::string& scheme_filter) {
  struct Row {
    Experiment e;
    std::vector<Scheme> schemes;
    std::string initial;
    std::string figure;
  };
  const std::vector<Scheme> vec3{Scheme::MinimalMidpoint, Scheme::SphericalMidpoint,
                                 Scheme::ClassicalMidpoint};
  const std::vector<Row> rows{
      {Experiment::RigidBody, {Scheme::MinimalMidpoint}, "paper (W0_ij = 1/n above the diagonal)", "1"},
      {Experiment::Brockett, {Scheme::MinimalMidpoint}, "random (seeded uniform(0,1), symmetrised)", "2"},
      {Experiment::Bench, vec3, "random, paper_curve", "3"},
      {Experiment::Convergence, vec3, "paper_curve, random", "4"},
      {Experiment::PointVortex, {Scheme::HyperbolicMidpoint}, "paper_w1, paper_w2", "5, 6, 7"},
      {Experiment::SpinChain, vec3, "paper_curve, random", "energy comparison (configs/)"},
  };
  std::optional<Scheme> filter;
  if (!scheme_filter.empty()) filter = parse_scheme(scheme_filter);

  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-13s %-58s %-42s %s\n", "experiment", "schemes",
                "initial data", "figure");
  out << line;
  for (const auto& r : rows) {
    if (filter && std::find(r.schemes.begin(), r.schemes.end(), *filter) == r.schemes.end()) continue;
    std::string schemes;
    for (Scheme s : r.schemes) {
      if (!schemes.empty()) schemes += ", ";
      schemes += to_string(s);
    }
    std::snprintf(line, sizeof line, "%-13s %-58s %-42s %s\n",
                  std::string(to_string(r.e)).c_str(), schemes.c_str(), r.initial.c_str(),
                  r.figure.c_str());
    out << line;
  }
  return out.str();
}

std::vector<ExperimentConfig> figure_configs(int figure, const fs::path& output_dir) {
  ExperimentConfig c;
  c.output_dir = output_dir;
  c.method = SolverMethod::Newton;
  c.tol = 1e-13;
  switch (figure) {
    case 1:
      c.experiment = Experiment::RigidBody;
      c.n = 10;
      c.h = 0.1;
      c.t_final = 100.0;
      return {c};
    case 2:
      c.experiment = Experiment::Brockett;
      c.n = 10;
      c.h = 0.1;
      c.t_final = 1000.0;
      c.output_stride = 10;
      return {c};
    case 3:
      c.experiment = Experiment::Bench;
      c.method = SolverMethod::FixedPoint;
      c.initial = "random";
      c.h = 0.1;
      c.n_list = {10, 50, 100, 200};
      c.bench_schemes = {Scheme::MinimalMidpoint, Scheme::SphericalMidpoint};
      return {c};
    case 4: {
      c.experiment = Experiment::Convergence;
      c.n_particles = 100;
      c.initial = "paper_curve";
      c.t_final = 1.0;
      c.reference_factor = 8;
      std::vector<ExperimentConfig> out;
      for (Scheme s : {Scheme::MinimalMidpoint, Scheme::SphericalMidpoint}) {
        ExperimentConfig e = c;
        e.scheme = s;
        e.output_dir = output_dir / std::string(to_string(s));
        out.push_back(e);
      }
      return out;
    }
    case 5:
    case 6:
    case 7: {
      c.experiment = Experiment::PointVortex;
      ExperimentConfig w1 = c, w2 = c;
      w1.initial = "paper_w1";
      w1.h = 0.01;
      w1.t_final = 10.0;
      w2.initial = "paper_w2";
      w2.h = 0.001;
      w2.t_final = 1.0;
      if (figure == 5) return {w1};
      if (figure == 6) return {w2};
      w1.output_dir = output_dir / "paper_w1";
      w2.output_dir = output_dir / "paper_w2";
      return {w1, w2};
    }
    default:
      throw ConfigError("figure id must be between 1 and 7, got " + std::to_string(figure));
  }
}

}  // namespace isospec::cli

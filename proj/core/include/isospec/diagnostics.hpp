#pragma once

// Trajectory recording, drift series, convergence-order estimation and cost
// benchmarking shared by all experiments. The drivers are templates over the
// state type so the same harness serves matrices, spin chains and vortices.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "isospec/error.hpp"
#include "isospec/matrix.hpp"

namespace isospec {

template <class State>
struct StepOutcome {
  State state;
  int iterations = 0;
};

template <class State>
using Stepper = std::function<StepOutcome<State>(const State&, double)>;

/// A named group of quantities measured at every recorded time. The drift of
/// each quantity is |Q(t) - Q(0)| (complex modulus, so eigenvalues fit too).
template <class State>
struct Observer {
  std::vector<std::string> names;
  std::function<std::vector<Complex>(const State&)> measure;
};

struct DriftSeries {
  std::string name;
  std::vector<double> times;
  std::vector<double> values;
};

struct StepFailure {
  std::size_t step_index = 0;  // 1-based index of the step that failed
  ErrorKind kind = ErrorKind::NonConvergence;
  std::string message;
};

template <class State>
struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<State> states;            // empty when states are not kept
  std::vector<std::string> columns;     // one per observed quantity
  std::vector<std::vector<Complex>> samples;  // samples[column][time]
  std::vector<DriftSeries> drifts;      // aligned with columns
  std::vector<int> iterations;          // per step
  std::vector<double> step_seconds;     // per step, wall clock
  std::optional<StepFailure> failure;

  bool ok() const { return !failure.has_value(); }
  std::size_t steps_taken() const { return iterations.size(); }

  const DriftSeries& drift(const std::string& name) const {
    for (const auto& d : drifts) {
      if (d.name == name) return d;
    }
    throw Error(ErrorKind::InvalidArgument, "no observer named " + name);
  }
};

/// ceil(t_final / h), with quotients within 1e-9 of an integer rounded to it.
std::size_t step_count(double h, double t_final);

double max_value(const DriftSeries& d);

/// max drift over the first and second half of the time span.
std::pair<double, double> half_span_drifts(const DriftSeries& d);

/// Least-squares slope of log(err) against log(h) over points with
/// err >= floor. Throws InvalidArgument with fewer than two usable points.
double fit_loglog_slope(const std::vector<double>& h,
                        const std::vector<double>& err, double floor = 1e-12);

template <class State>
TrajectoryRecord<State> run_trajectory(
    const Stepper<State>& stepper, const State& initial, double h,
    double t_final, const std::vector<Observer<State>>& observers,
    bool keep_states = true) {
  if (!(h > 0.0) || !(t_final >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "run_trajectory needs h > 0 and t_final >= 0");
  }
  const std::size_t steps = step_count(h, t_final);
  TrajectoryRecord<State> rec;
  for (const auto& obs : observers) {
    for (const auto& name : obs.names) rec.columns.push_back(name);
  }
  rec.samples.resize(rec.columns.size());
  rec.times.reserve(steps + 1);
  rec.iterations.reserve(steps);
  rec.step_seconds.reserve(steps);

  const auto record = [&](const State& s, double t) {
    rec.times.push_back(t);
    if (keep_states) rec.states.push_back(s);
    std::size_t col = 0;
    for (const auto& obs : observers) {
      const auto values = obs.measure(s);
      if (values.size() != obs.names.size()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "observer returned the wrong number of values");
      }
      for (const auto& v : values) rec.samples[col++].push_back(v);
    }
  };

  State current = initial;
  record(current, 0.0);
  for (std::size_t k = 1; k <= steps; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      StepOutcome<State> out = stepper(current, h);
      const auto t1 = std::chrono::steady_clock::now();
      current = std::move(out.state);
      rec.iterations.push_back(out.iterations);
      rec.step_seconds.push_back(
          std::chrono::duration<double>(t1 - t0).count());
      record(current, static_cast<double>(k) * h);
    } catch (const Error& e) {
      rec.failure = StepFailure{k, e.kind(),
                                "step " + std::to_string(k) + ": " + e.what()};
      break;
    }
  }

  for (std::size_t c = 0; c < rec.columns.size(); ++c) {
    DriftSeries d{rec.columns[c], rec.times, {}};
    d.values.reserve(rec.samples[c].size());
    for (const auto& v : rec.samples[c]) {
      d.values.push_back(std::abs(v - rec.samples[c].front()));
    }
    rec.drifts.push_back(std::move(d));
  }
  return rec;
}

struct OrderEstimate {
  std::vector<double> step_sizes;
  std::vector<double> max_errors;
  double fitted_slope = 0.0;
};

/// Reference from the same stepper at min(h_list) / factor.
struct FineStepReference {
  int factor = 8;
};

template <class State>
using AnalyticReference = std::function<State(double)>;

template <class State>
using StateDistance = std::function<double(const State&, const State&)>;

template <class State>
OrderEstimate estimate_order(
    const Stepper<State>& stepper, const State& initial, double t_final,
    std::vector<double> h_list,
    const std::variant<FineStepReference, AnalyticReference<State>>& reference,
    const StateDistance<State>& distance) {
  if (h_list.size() < 3) {
    throw Error(ErrorKind::InvalidArgument,
                "estimate_order needs at least three step sizes");
  }
  for (std::size_t i = 1; i < h_list.size(); ++i) {
    if (!(h_list[i] < h_list[i - 1])) {
      throw Error(ErrorKind::InvalidArgument,
                  "step sizes must be strictly decreasing");
    }
  }
  const auto divides = [](double big, double small) {
    const double q = big / small;
    return q >= 1.0 - 1e-9 && std::abs(q - std::round(q)) <= 1e-9 * q;
  };
  for (double h : h_list) {
    if (!(h > 0.0) || !divides(t_final, h)) {
      throw Error(ErrorKind::InvalidArgument,
                  "each step size must divide t_final evenly");
    }
  }

  std::function<State(std::size_t, double)> exact;
  TrajectoryRecord<State> ref;
  double h_ref = 0.0;
  if (const auto* fine = std::get_if<FineStepReference>(&reference)) {
    if (fine->factor < 1) {
      throw Error(ErrorKind::InvalidArgument, "reference factor must be >= 1");
    }
    h_ref = h_list.back() / fine->factor;
    ref = run_trajectory<State>(stepper, initial, h_ref, t_final, {});
    if (!ref.ok()) {
      throw Error(ref.failure->kind,
                  "reference trajectory failed: " + ref.failure->message);
    }
  }

  OrderEstimate est;
  for (double h : h_list) {
    auto rec = run_trajectory<State>(stepper, initial, h, t_final, {});
    if (!rec.ok()) {
      throw Error(rec.failure->kind, "trajectory at h = " + std::to_string(h) +
                                         " failed: " + rec.failure->message);
    }
    double err = 0.0;
    for (std::size_t k = 0; k < rec.states.size(); ++k) {
      const double t = rec.times[k];
      if (h_ref > 0.0) {
        const auto idx = static_cast<std::size_t>(std::llround(t / h_ref));
        err = std::max(err, distance(rec.states[k], ref.states.at(idx)));
      } else {
        err = std::max(err, distance(rec.states[k],
                                     std::get<AnalyticReference<State>>(
                                         reference)(t)));
      }
    }
    est.step_sizes.push_back(h);
    est.max_errors.push_back(err);
  }
  est.fitted_slope = fit_loglog_slope(est.step_sizes, est.max_errors);
  return est;
}

struct BenchRow {
  int n = 0;
  double seconds_per_step = 0.0;
};

inline constexpr int kBenchRepeats = 5;
inline constexpr int kBenchWarmupSteps = 10;

/// Mean wall time per step for each system size, after kBenchWarmupSteps
/// untimed steps; the median over kBenchRepeats repetitions is reported.
/// Steps are timed as one batch so sub-microsecond steps still resolve.
template <class State>
std::vector<BenchRow> bench_cost(const Stepper<State>& stepper,
                                 const std::function<State(int)>& state_family,
                                 const std::vector<int>& n_list, double h,
                                 int steps) {
  if (steps < 1 || !(h > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "bench_cost needs steps >= 1, h > 0");
  }
  std::vector<BenchRow> rows;
  for (int n : n_list) {
    std::vector<double> means;
    for (int rep = 0; rep < kBenchRepeats; ++rep) {
      State s = state_family(n);
      for (int k = 0; k < kBenchWarmupSteps; ++k) s = stepper(s, h).state;
      const auto t0 = std::chrono::steady_clock::now();
      for (int k = 0; k < steps; ++k) s = stepper(s, h).state;
      const auto t1 = std::chrono::steady_clock::now();
      means.push_back(std::chrono::duration<double>(t1 - t0).count() / steps);
    }
    std::nth_element(means.begin(), means.begin() + means.size() / 2,
                     means.end());
    rows.push_back({n, means[means.size() / 2]});
  }
  return rows;
}

}  // namespace isospec

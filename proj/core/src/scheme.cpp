#include "isospec/scheme.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "isospec/error.hpp"

namespace isospec {
namespace {

void check_inputs(const FlowProblem& problem, const SquareMatrix& w_k,
                  double h) {
  if (!problem.b_map) {
    throw Error(ErrorKind::InvalidArgument, "FlowProblem has no b_map");
  }
  check_square_finite(w_k);
  if (problem.dim != 0 && w_k.rows() != problem.dim) {
    throw Error(ErrorKind::DimensionMismatch,
                "state dimension does not match FlowProblem::dim");
  }
  if (!std::isfinite(h)) {
    throw Error(ErrorKind::InvalidArgument, "step size must be finite");
  }
}

SquareMatrix eval_b(const FlowProblem& problem, const SquareMatrix& w) {
  SquareMatrix b = problem.b_map(w);
  if (b.rows() != w.rows() || b.cols() != w.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "b_map changed the dimension");
  }
  return b;
}

}  // namespace

Eigen::VectorXd pack(const SquareMatrix& m) {
  const Eigen::Index s = m.size();
  Eigen::VectorXd v(2 * s);
  v.head(s) = m.reshaped().real();
  v.tail(s) = m.reshaped().imag();
  return v;
}

SquareMatrix unpack(const Eigen::VectorXd& v, Eigen::Index n) {
  const Eigen::Index s = n * n;
  SquareMatrix m(n, n);
  m.reshaped().real() = v.head(s);
  m.reshaped().imag() = v.tail(s);
  return m;
}

SquareMatrix fixed_point_map(const SquareMatrix& y, const SquareMatrix& x,
                             const SquareMatrix& b_of_x, double h) {
  if (y.rows() != x.rows() || b_of_x.rows() != x.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "fixed_point_map: dimensions");
  }
  const SquareMatrix bx = b_of_x * x;
  return y + (0.5 * h) * (bx - x * b_of_x) + (0.25 * h * h) * (bx * b_of_x);
}

StageSolution solve_stage(const FlowProblem& problem, const SquareMatrix& w_k,
                          double h, const SolverConfig& cfg) {
  check_inputs(problem, w_k, h);
  const Eigen::Index n = w_k.rows();
  SquareMatrix last_b;
  auto map = [&](const Eigen::VectorXd& v) {
    const SquareMatrix x = unpack(v, n);
    last_b = eval_b(problem, x);
    return pack(fixed_point_map(w_k, x, last_b, h));
  };
  SolveResult r = solve_fixed_point_problem(map, pack(w_k), cfg);
  return {unpack(r.x, n), std::move(last_b), r.iterations, r.residual};
}

StepReport step(const FlowProblem& problem, const SquareMatrix& w_k, double h,
                const SolverConfig& cfg) {
  StageSolution stage = solve_stage(problem, w_k, h, cfg);
  const SquareMatrix& wt = stage.w_tilde;
  const SquareMatrix half_b = (0.5 * h) * stage.b_tilde;
  const SquareMatrix id = identity(w_k.rows());
  SquareMatrix w_next = (id + half_b) * wt * (id - half_b);
  return {std::move(w_next), std::move(stage.w_tilde), stage.iters,
          stage.residual};
}

SquareMatrix step_cayley_form(const FlowProblem& problem,
                              const SquareMatrix& w_k,
                              const SquareMatrix& w_tilde, double h) {
  check_inputs(problem, w_k, h);
  const SquareMatrix half_b = (0.5 * h) * eval_b(problem, w_tilde);
  // Cay(X)^{-1} = Cay(-X)
  return cayley(-half_b) * w_k * cayley(half_b);
}

SquareMatrix step_stage_form_oracle(const FlowProblem& problem,
                                    const SquareMatrix& w_k, double h,
                                    const SolverConfig& cfg) {
  check_inputs(problem, w_k, h);
  cfg.validate();
  const Eigen::Index n = w_k.rows();
  SquareMatrix x = SquareMatrix::Zero(n, n);
  SquareMatrix y = SquareMatrix::Zero(n, n);
  SquareMatrix k = SquareMatrix::Zero(n, n);
  SquareMatrix wt = w_k;
  double r0 = -1.0;
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= cfg.max_iters; ++it) {
    const SquareMatrix b = eval_b(problem, wt);
    const SquareMatrix x_new = -h * (w_k + 0.5 * x) * b;
    const SquareMatrix y_new = h * b * (w_k + 0.5 * y);
    const SquareMatrix k_new = (0.5 * h) * b * (x + k);
    const SquareMatrix wt_new = w_k + 0.5 * (x + y + k);
    residual = std::max({max_abs(x_new - x), max_abs(y_new - y),
                         max_abs(k_new - k), max_abs(wt_new - wt)});
    if (r0 < 0.0) r0 = residual;
    if (residual <= cfg.tol) return w_k + h * commutator(b, wt);
    if (!std::isfinite(residual) || residual > kDivergenceFactor * r0) {
      throw SolverError(ErrorKind::DivergenceDetected,
                        "stage-form oracle diverged", it, residual);
    }
    x = x_new;
    y = y_new;
    k = k_new;
    wt = wt_new;
  }
  std::ostringstream msg;
  msg << "stage-form oracle did not converge; residual " << residual;
  throw SolverError(ErrorKind::NonConvergence, msg.str(), cfg.max_iters,
                    residual);
}

}  // namespace isospec

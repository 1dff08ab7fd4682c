#include "isospec/solver.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "isospec/error.hpp"

namespace isospec {
namespace {

double max_abs(const Eigen::VectorXd& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

[[noreturn]] void throw_divergence(int iters, double residual, double r0) {
  std::ostringstream msg;
  msg << "solver diverged: residual " << residual << " after " << iters
      << " iterations (initial " << r0 << ")";
  throw SolverError(ErrorKind::DivergenceDetected, msg.str(), iters, residual);
}

[[noreturn]] void throw_nonconvergence(int iters, double residual,
                                       double tol) {
  std::ostringstream msg;
  msg << "solver did not reach tol " << tol << " in " << iters
      << " iterations; final residual " << residual;
  throw SolverError(ErrorKind::NonConvergence, msg.str(), iters, residual);
}

bool diverged(double residual, double r0) {
  return !std::isfinite(residual) || residual > kDivergenceFactor * r0;
}

SolveResult iterate(const FixedPointMap& map, Eigen::VectorXd x,
                    const SolverConfig& cfg) {
  double r0 = -1.0;
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= cfg.max_iters; ++it) {
    Eigen::VectorXd fx = map(x);
    residual = max_abs(x - fx);
    if (r0 < 0.0) r0 = residual;
    if (residual <= cfg.tol) return {std::move(x), it, residual};
    if (diverged(residual, r0)) throw_divergence(it, residual, r0);
    x = std::move(fx);
  }
  throw_nonconvergence(cfg.max_iters, residual, cfg.tol);
}

Eigen::MatrixXd fd_jacobian(const FixedPointMap& map, const Eigen::VectorXd& x,
                            const Eigen::VectorXd& g, double step) {
  const Eigen::Index m = x.size();
  Eigen::MatrixXd jac(m, m);
  Eigen::VectorXd xp = x;
  for (Eigen::Index j = 0; j < m; ++j) {
    const double delta = step * std::max(1.0, std::abs(x[j]));
    xp[j] = x[j] + delta;
    jac.col(j) = ((xp - map(xp)) - g) / delta;
    xp[j] = x[j];
  }
  return jac;
}

SolveResult newton(const FixedPointMap& map, Eigen::VectorXd x,
                   const SolverConfig& cfg) {
  const Eigen::Index m = x.size();
  JacobianCache local;
  JacobianCache& cache = cfg.jacobian_cache ? *cfg.jacobian_cache : local;
  const bool reuse = static_cast<bool>(cfg.jacobian_cache);

  // State before the last update, kept so that a poor step taken with a
  // stale cached Jacobian can be redone with a fresh one.
  Eigen::VectorXd x_prev;
  Eigen::VectorXd g_prev;
  double r_prev = std::numeric_limits<double>::infinity();
  bool prev_was_fresh = true;

  double r0 = -1.0;
  double residual = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= cfg.max_iters; ++it) {
    Eigen::VectorXd g = x - map(x);
    residual = max_abs(g);
    if (r0 < 0.0) r0 = residual;
    if (residual <= cfg.tol) return {std::move(x), it, residual};

    const bool slow = residual > kJacobianRefreshRatio * r_prev;
    bool fresh = false;
    if (slow && !prev_was_fresh) {
      x = std::move(x_prev);
      g = std::move(g_prev);
      residual = r_prev;
      fresh = true;
    } else if (diverged(residual, r0)) {
      throw_divergence(it, residual, r0);
    } else {
      fresh = !reuse || !cache.valid_for(m) || slow;
    }
    if (fresh) {
      try {
        cache.store(fd_jacobian(map, x, g, cfg.newton_fd_step));
      } catch (const SolverError&) {
        throw SolverError(ErrorKind::LinearSolveFailure,
                          "Newton Jacobian is singular", it, residual);
      }
    }
    Eigen::VectorXd dx = cache.solve(g);
    x_prev = x;
    g_prev = std::move(g);
    r_prev = residual;
    prev_was_fresh = fresh;
    x -= dx;
  }
  throw_nonconvergence(cfg.max_iters, residual, cfg.tol);
}

}  // namespace

void JacobianCache::store(const Eigen::MatrixXd& jacobian) {
  lu_.compute(jacobian);
  const double rcond = lu_.rcond();
  if (!(rcond > std::numeric_limits<double>::epsilon())) {
    valid_ = false;
    std::ostringstream msg;
    msg << "Newton Jacobian is singular (rcond " << rcond << ")";
    throw SolverError(ErrorKind::LinearSolveFailure, msg.str(), 0, 0.0);
  }
  size_ = jacobian.rows();
  valid_ = true;
  ++refreshes_;
}

std::string_view to_string(SolverMethod method) {
  return method == SolverMethod::Newton ? "Newton" : "FixedPoint";
}

void SolverConfig::validate() const {
  if (!(tol > 0.0) || max_iters < 1 || !(newton_fd_step > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "SolverConfig requires tol > 0, max_iters >= 1 and "
                "newton_fd_step > 0");
  }
}

SolveResult solve_fixed_point_problem(const FixedPointMap& map,
                                      Eigen::VectorXd x0,
                                      const SolverConfig& cfg) {
  cfg.validate();
  if (cfg.method == SolverMethod::Newton) return newton(map, std::move(x0), cfg);
  return iterate(map, std::move(x0), cfg);
}

}  // namespace isospec

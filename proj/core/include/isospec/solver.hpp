#pragma once

// Nonlinear solvers for the implicit stage equations. Every scheme in the
// library reduces its implicit relation to a fixed-point problem x = F(x) over
// a real coordinate vector; these routines solve it either by plain iteration
// or by Newton's method on G(x) = x - F(x) with a finite-difference Jacobian.

#include <functional>
#include <memory>
#include <string_view>

#include <Eigen/Dense>

namespace isospec {

enum class SolverMethod { FixedPoint, Newton };

std::string_view to_string(SolverMethod method);

/// Last factorized finite-difference Jacobian of a Newton solve. When a cache
/// is attached to a SolverConfig, Newton reuses the stored factorization for
/// later iterations and later solves of the same size, and reassembles it only
/// when the residual stops shrinking by at least kJacobianRefreshRatio per
/// iteration. Not thread-safe: give each trajectory its own cache.
class JacobianCache {
 public:
  bool valid_for(Eigen::Index size) const { return valid_ && size_ == size; }
  void store(const Eigen::MatrixXd& jacobian);
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const { return lu_.solve(rhs); }
  void invalidate() { valid_ = false; }
  int refreshes() const { return refreshes_; }

 private:
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  Eigen::Index size_ = 0;
  bool valid_ = false;
  int refreshes_ = 0;
};

inline constexpr double kJacobianRefreshRatio = 0.25;

struct SolverConfig {
  SolverMethod method = SolverMethod::FixedPoint;
  double tol = 1e-13;        // max-entry residual threshold
  int max_iters = 100;
  double newton_fd_step = 1e-7;
  /// Optional; without it every Newton iteration assembles a fresh Jacobian.
  std::shared_ptr<JacobianCache> jacobian_cache;

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
};

struct SolveResult {
  Eigen::VectorXd x;
  int iterations = 0;  // number of residual evaluations used for the test
  double residual = 0.0;
};

using FixedPointMap = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Residual growth over the starting residual that counts as divergence.
inline constexpr double kDivergenceFactor = 1e6;

/// Solves x = map(x) starting from x0.
///
/// The last call to `map` before returning is always made at the returned x,
/// so callers may cache quantities computed inside `map` and reuse them.
///
/// Throws SolverError (NonConvergence, DivergenceDetected, LinearSolveFailure).
SolveResult solve_fixed_point_problem(const FixedPointMap& map,
                                      Eigen::VectorXd x0,
                                      const SolverConfig& cfg);

}  // namespace isospec

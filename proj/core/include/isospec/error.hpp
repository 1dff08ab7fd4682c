#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isospec {

enum class ErrorKind {
  DimensionMismatch,
  InvalidArgument,
  SingularMatrix,
  EigenNonConvergence,
  NonConvergence,
  DivergenceDetected,
  LinearSolveFailure,
  AntipodalDegeneracy,
  CollisionProximity,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the nonlinear solvers; carries the state of the iteration when it
/// gave up.
class SolverError : public Error {
 public:
  SolverError(ErrorKind kind, const std::string& what, int iterations,
              double residual)
      : Error(kind, what), iterations_(iterations), residual_(residual) {}

  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int iterations_;
  double residual_;
};

/// Raised when a linear solve hits a (numerically) singular matrix.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, double condition_estimate)
      : Error(ErrorKind::SingularMatrix, what),
        condition_estimate_(condition_estimate) {}

  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

}  // namespace isospec

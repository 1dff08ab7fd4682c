#pragma once

// The isospectral minimal midpoint step for matrix flows  W' = [B(W), W]:
//
//   W_k     = (Id - h/2 B(Wt)) Wt (Id + h/2 B(Wt))
//   W_{k+1} = (Id + h/2 B(Wt)) Wt (Id - h/2 B(Wt))
//
// The only unknown is the stage Wt. It is found as the fixed point
// Wt = F_h(Wt) with F_h(X) = W_k + h/2 [B(X), X] + h^2/4 B(X) X B(X).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isospec/matrix.hpp"
#include "isospec/solver.hpp"

namespace isospec {

using MatrixMap = std::function<SquareMatrix(const SquareMatrix&)>;

struct NamedInvariant {
  std::string name;
  std::function<double(const SquareMatrix&)> fn;
};

/// A matrix flow W' = [B(W), W], optionally Lie-Poisson with a Hamiltonian
/// and optionally living in a J-quadratic algebra.
struct FlowProblem {
  Eigen::Index dim = 0;
  MatrixMap b_map;
  std::function<double(const SquareMatrix&)> hamiltonian;  // may be empty
  std::optional<SquareMatrix> structure_j;
  std::vector<NamedInvariant> invariants;
};

struct StageSolution {
  SquareMatrix w_tilde;
  SquareMatrix b_tilde;  // B(w_tilde), from the last solver evaluation
  int iters = 0;
  double residual = 0.0;
};

struct StepReport {
  SquareMatrix w_next;
  SquareMatrix w_tilde;
  int iters = 0;
  double residual = 0.0;
};

/// y + h/2 [b, x] + h^2/4 b x b.
SquareMatrix fixed_point_map(const SquareMatrix& y, const SquareMatrix& x,
                             const SquareMatrix& b_of_x, double h);

/// Solves the first line of the scheme for the stage, starting from w_k.
/// Negative h is accepted (it runs the map backwards in time).
StageSolution solve_stage(const FlowProblem& problem, const SquareMatrix& w_k,
                          double h, const SolverConfig& cfg);

/// One step of the minimal midpoint scheme. B is evaluated once per solver
/// residual and the last value is reused for the update.
StepReport step(const FlowProblem& problem, const SquareMatrix& w_k, double h,
                const SolverConfig& cfg);

/// Cay(h/2 B(Wt))^{-1} W_k Cay(h/2 B(Wt)) for an already solved stage.
SquareMatrix step_cayley_form(const FlowProblem& problem,
                              const SquareMatrix& w_k,
                              const SquareMatrix& w_tilde, double h);

/// Independent oracle: solves the non-minimal stage system in the unknowns
/// (X, Y, K, Wt)
///   X  = -h (W_k + X/2) B(Wt)
///   Y  =  h B(Wt) (W_k + Y/2)
///   K  =  h/2 B(Wt) (X + K)
///   Wt =  W_k + (X + Y + K)/2
/// by joint fixed-point iteration and returns W_k + h [B(Wt), Wt].
/// Always iterates, whatever cfg.method says.
SquareMatrix step_stage_form_oracle(const FlowProblem& problem,
                                    const SquareMatrix& w_k, double h,
                                    const SolverConfig& cfg);

/// Real coordinates of a complex matrix: real parts then imaginary parts,
/// column-major.
Eigen::VectorXd pack(const SquareMatrix& m);
SquareMatrix unpack(const Eigen::VectorXd& v, Eigen::Index n);

}  // namespace isospec

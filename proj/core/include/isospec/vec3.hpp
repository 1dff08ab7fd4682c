#pragma once

// Minimal-variable schemes on R^3 and on products (R^3)^N.
//
// Sign convention: every field here describes  w_i' = w_i x B_i(w),  the form
// used by the classical and spherical midpoint rules and by the Heisenberg
// spin chain. Under the hat map this is the matrix flow W' = [B, W] with
// B = -hat(b), and the minimal midpoint below is exactly the matrix scheme
// transported through that identification:
//
//   w_k     = wt - h/2 wt x b + h^2/4 (b . wt) b
//   w_{k+1} = wt + h/2 wt x b + h^2/4 (b . wt) b,      b = B(wt).

#include <functional>

#include <Eigen/Dense>

#include "isospec/matrix.hpp"
#include "isospec/solver.hpp"

namespace isospec {

using Vec3 = Eigen::Vector3d;

/// N particles, one per column.
using ChainState = Eigen::Matrix3Xd;
using ChainMap = std::function<ChainState(const ChainState&)>;

struct Vec3Field {
  ChainMap b_fn;                                           // per-particle B
  std::function<double(const ChainState&)> hamiltonian;    // may be empty
};

struct ChainStepReport {
  ChainState w_next;
  ChainState w_tilde;  // stage (minimal midpoint) or midpoint point (others)
  int iters = 0;
  double residual = 0.0;
};

/// Threshold on |w_{k+1} + w_k| below which the spherical midpoint gives up.
inline constexpr double kAntipodalThreshold = 1e-8;

/// 3x3 skew matrix with hat(w) v = w x v.
SquareMatrix hat(const Vec3& w);

/// Inverse of hat on the skew-symmetric part of the real part of m.
Vec3 vee(const SquareMatrix& m);

ChainStepReport step_min_midpoint_r3(const Vec3Field& field,
                                     const ChainState& w_k, double h,
                                     const SolverConfig& cfg);

/// w_{k+1} = w_k + h c x B(c),  c = sqrt(|w_{k+1}| |w_k|) (w_{k+1}+w_k)/|w_{k+1}+w_k|
/// per particle, all particles solved jointly.
ChainStepReport step_spherical_midpoint(const Vec3Field& field,
                                        const ChainState& w_k, double h,
                                        const SolverConfig& cfg);

/// w_{k+1} = w_k + h m x B(m),  m = (w_{k+1} + w_k)/2.
ChainStepReport step_classical_midpoint(const Vec3Field& field,
                                        const ChainState& w_k, double h,
                                        const SolverConfig& cfg);

}  // namespace isospec

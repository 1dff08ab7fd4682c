#pragma once

// The minimal midpoint scheme on sl(2,R)* written in R^3 coordinates
//
//   [[x, y+z], [y-z, -x]]  <->  (x, y, z).
//
// In these coordinates the matrix commutator becomes a x_L b = 2 L (a x b) with
// L = diag(1, 1, -1) (precisely: vec_to_sl2(a x_L b) = [vec_to_sl2(b),
// vec_to_sl2(a)]), coadjoint orbits are the quadrics a ._L a = const, and the
// product B W B becomes the trilinear map M. Fields describe
// w_i' = w_i x_L B_i(w), i.e. the matrix flow with B = vec_to_sl2(b):
//
//   w_k     = wt - h/2 wt x_L b - h^2/4 M(b, wt, b)
//   w_{k+1} = wt + h/2 wt x_L b - h^2/4 M(b, wt, b).

#include <functional>

#include <Eigen/Dense>

#include "isospec/matrix.hpp"
#include "isospec/solver.hpp"
#include "isospec/vec3.hpp"

namespace isospec {

using HypVec3 = Eigen::Vector3d;

struct HypChainState {
  Eigen::Matrix3Xd particles;  // one column per particle
  Eigen::VectorXd strengths;   // Gamma_i, nonzero

  /// Throws InvalidArgument on length mismatch, zero strength or non-finite
  /// entries.
  void validate() const;
};

struct HypField {
  ChainMap b_fn;
  std::function<double(const Eigen::Matrix3Xd&)> hamiltonian;  // may be empty
};

struct HypStepReport {
  HypChainState next;
  Eigen::Matrix3Xd w_tilde;
  int iters = 0;
  double residual = 0.0;
};

/// Requires a real traceless 2x2 matrix (to 1e-12).
HypVec3 sl2_to_vec(const SquareMatrix& w);
SquareMatrix vec_to_sl2(const HypVec3& v);

/// 2 L (a x b).
HypVec3 l_product(const HypVec3& a, const HypVec3& b);

/// a . (L b).
double l_inner(const HypVec3& a, const HypVec3& b);

/// Coordinates of the product vec_to_sl2(a) vec_to_sl2(b) vec_to_sl2(c),
/// read off its (0,0), (0,1) and (1,0) entries.
HypVec3 m_correction(const HypVec3& a, const HypVec3& b, const HypVec3& c);

/// One step of the hyperbolic midpoint method, all particles solved jointly.
HypStepReport step_hyperbolic_midpoint(const HypField& field,
                                       const HypChainState& state, double h,
                                       const SolverConfig& cfg);

}  // namespace isospec

#pragma once

// Ready-made model systems: the generalized rigid body on so(n), the Brockett
// double-bracket flow, the periodic Heisenberg spin chain and point vortices
// on the hyperbolic plane.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "isospec/scheme.hpp"
#include "isospec/sl2.hpp"
#include "isospec/vec3.hpp"

namespace isospec {

// --- generalized rigid body --------------------------------------------------

struct RigidBodySpec {
  int n = 10;  // even, >= 2
  void validate() const;
};

/// d_i = 1/i for i <= n/2 and 1/(n+1-i) above (1-based).
std::vector<double> rigid_body_weights(int n);

/// Skew projection of the row-scaled matrix: entries W_ij (d_i + d_j) / 2.
SquareMatrix rigid_body_inverse_inertia(const SquareMatrix& w,
                                        const std::vector<double>& weights);

/// B(W) = -I^{-1} W, H(W) = 1/2 Tr((I^{-1} W)^dagger W), J = Id.
FlowProblem rigid_body_problem(const RigidBodySpec& spec);

/// (W0)_ij = 1/n above the diagonal, skew below.
SquareMatrix rigid_body_initial_state(const RigidBodySpec& spec);

// --- Brockett flow -----------------------------------------------------------

struct BrockettSpec {
  int n = 10;
  SquareMatrix n_matrix;  // empty means diag(1, ..., n)
  std::uint64_t seed = 1;

  /// Fills the default N and checks it is diagonal with increasing entries.
  BrockettSpec& normalize();
};

/// B(W) = [N, W].
FlowProblem brockett_problem(BrockettSpec spec);

/// (R + R^T)/2 with R_ij drawn uniformly from the open interval (0, 1).
SquareMatrix brockett_initial_state(const BrockettSpec& spec);

/// Frobenius norm of the off-diagonal part.
double off_diagonal_norm(const SquareMatrix& w);

/// True when sorting diag(w) by real part gives the same permutation as
/// sorting diag(n_matrix).
bool diagonal_sorted_like(const SquareMatrix& w, const SquareMatrix& n_matrix);

// --- Heisenberg spin chain ---------------------------------------------------

enum class ChainCurve { PaperCurve, Random };

struct SpinChainSpec {
  int n_particles = 100;  // >= 3
  ChainCurve initial_curve = ChainCurve::PaperCurve;
  std::uint64_t seed = 1;
};

/// B_i = w_{i-1} + w_{i+1}, periodic.
Vec3Field spin_chain_field(const SpinChainSpec& spec);

/// PaperCurve: w(x) = (cos 2pi x^2 sin 2pi x^3, sin 2pi x^2 sin 2pi x^3,
/// cos 2pi x^3) at x = k/N; Random: uniform on the unit sphere.
ChainState spin_chain_initial_state(const SpinChainSpec& spec);

/// sum_i w_i . w_{i+1}, periodic.
double spin_chain_hamiltonian(const ChainState& w);

Vec3 total_spin(const ChainState& w);

// --- point vortices on the hyperbolic plane ----------------------------------

struct PointVortexSpec {
  Eigen::Matrix3Xd positions;
  Eigen::VectorXd strengths;
  /// Allowed deviation of w_i ._L w_i from -1.
  double hyperboloid_tol = 1e-10;

  void validate() const;
};

/// Equilateral relative equilibrium, printed to four decimals.
PointVortexSpec paper_w1();
/// Geodesic relative equilibrium, printed to four decimals.
PointVortexSpec paper_w2();

/// Throws CollisionProximity when |w_i ._L w_j| - 1 drops below this.
inline constexpr double kCollisionThreshold = 1e-12;

struct PointVortexSystem {
  HypField field;  // B_i = -(1/pi) sum_{j != i} G_j w_j / ((w_i ._L w_j)^2 - 1)
  std::function<double(const Eigen::Matrix3Xd&)> hamiltonian;
  std::function<Vec3(const Eigen::Matrix3Xd&)> momentum;  // sum_i G_i w_i
  Eigen::VectorXd strengths;
};

PointVortexSystem point_vortex_field(const PointVortexSpec& spec);

HypChainState point_vortex_initial_state(const PointVortexSpec& spec);

}  // namespace isospec

#include "isospec/systems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "isospec/error.hpp"

namespace isospec {
namespace {

std::vector<int> argsort_real_diagonal(const SquareMatrix& m) {
  std::vector<int> idx(static_cast<std::size_t>(m.rows()));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return m(a, a).real() < m(b, b).real();
  });
  return idx;
}

double open_unit_uniform(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  double v = 0.0;
  while (v == 0.0) v = dist(rng);
  return v;
}

}  // namespace

// --- rigid body ---

void RigidBodySpec::validate() const {
  if (n < 2 || n % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "RigidBodySpec: n must be even and >= 2");
  }
}

std::vector<double> rigid_body_weights(int n) {
  std::vector<double> d(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    d[static_cast<std::size_t>(i - 1)] =
        i <= n / 2 ? 1.0 / i : 1.0 / (n + 1 - i);
  }
  return d;
}

SquareMatrix rigid_body_inverse_inertia(const SquareMatrix& w,
                                        const std::vector<double>& weights) {
  const Eigen::Index n = w.rows();
  if (static_cast<Eigen::Index>(weights.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, "inertia weights vs state");
  }
  SquareMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      out(i, j) = w(i, j) * (0.5 * (weights[static_cast<std::size_t>(i)] +
                                    weights[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

FlowProblem rigid_body_problem(const RigidBodySpec& spec) {
  spec.validate();
  const auto weights = rigid_body_weights(spec.n);
  FlowProblem p;
  p.dim = spec.n;
  p.b_map = [weights](const SquareMatrix& w) {
    return SquareMatrix(-rigid_body_inverse_inertia(w, weights));
  };
  p.hamiltonian = [weights](const SquareMatrix& w) {
    return 0.5 * frobenius_inner(rigid_body_inverse_inertia(w, weights), w).real();
  };
  p.structure_j = identity(spec.n);
  p.invariants.push_back({"hamiltonian", p.hamiltonian});
  p.invariants.push_back({"frobenius_norm_sq", [](const SquareMatrix& w) {
                            return frobenius_inner(w, w).real();
                          }});
  return p;
}

SquareMatrix rigid_body_initial_state(const RigidBodySpec& spec) {
  spec.validate();
  const double v = 1.0 / spec.n;
  SquareMatrix w = SquareMatrix::Zero(spec.n, spec.n);
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      w(i, j) = v;
      w(j, i) = -v;
    }
  }
  return w;
}

// --- Brockett ---

BrockettSpec& BrockettSpec::normalize() {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "BrockettSpec: n < 1");
  if (n_matrix.size() == 0) {
    n_matrix = SquareMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) n_matrix(i, i) = static_cast<double>(i + 1);
  }
  if (n_matrix.rows() != n || n_matrix.cols() != n) {
    throw Error(ErrorKind::DimensionMismatch, "BrockettSpec: N has wrong size");
  }
  check_square_finite(n_matrix);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && n_matrix(i, j) != Complex(0.0)) {
        throw Error(ErrorKind::InvalidArgument, "BrockettSpec: N not diagonal");
      }
    }
    if (n_matrix(i, i).imag() != 0.0 ||
        (i > 0 && !(n_matrix(i, i).real() > n_matrix(i - 1, i - 1).real()))) {
      throw Error(ErrorKind::InvalidArgument,
                  "BrockettSpec: N diagonal must be real and strictly increasing");
    }
  }
  return *this;
}

FlowProblem brockett_problem(BrockettSpec spec) {
  spec.normalize();
  const SquareMatrix nm = spec.n_matrix;
  FlowProblem p;
  p.dim = spec.n;
  p.b_map = [nm](const SquareMatrix& w) { return commutator(nm, w); };
  p.invariants.push_back({"off_diagonal_norm", off_diagonal_norm});
  p.invariants.push_back({"lyapunov_trace", [nm](const SquareMatrix& w) {
                            return (nm * w).trace().real();
                          }});
  return p;
}

SquareMatrix brockett_initial_state(const BrockettSpec& spec) {
  if (spec.n < 1) throw Error(ErrorKind::InvalidArgument, "BrockettSpec: n < 1");
  std::mt19937_64 rng(spec.seed);
  Eigen::MatrixXd r(spec.n, spec.n);
  // Row-major draw order, independent of Eigen's storage order.
  for (int i = 0; i < spec.n; ++i) {
    for (int j = 0; j < spec.n; ++j) r(i, j) = open_unit_uniform(rng);
  }
  const Eigen::MatrixXd s = 0.5 * (r + r.transpose());
  return s.cast<Complex>();
}

double off_diagonal_norm(const SquareMatrix& w) {
  SquareMatrix off = w;
  off.diagonal().setZero();
  return off.norm();
}

bool diagonal_sorted_like(const SquareMatrix& w, const SquareMatrix& n_matrix) {
  if (w.rows() != n_matrix.rows()) return false;
  return argsort_real_diagonal(w) == argsort_real_diagonal(n_matrix);
}

// --- spin chain ---

Vec3Field spin_chain_field(const SpinChainSpec& spec) {
  if (spec.n_particles < 3) {
    throw Error(ErrorKind::InvalidArgument, "spin chain needs N >= 3");
  }
  Vec3Field f;
  f.b_fn = [](const ChainState& w) {
    const Eigen::Index n = w.cols();
    ChainState b(3, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      b.col(i) = w.col((i + n - 1) % n) + w.col((i + 1) % n);
    }
    return b;
  };
  f.hamiltonian = spin_chain_hamiltonian;
  return f;
}

ChainState spin_chain_initial_state(const SpinChainSpec& spec) {
  if (spec.n_particles < 3) {
    throw Error(ErrorKind::InvalidArgument, "spin chain needs N >= 3");
  }
  const int n = spec.n_particles;
  ChainState w(3, n);
  if (spec.initial_curve == ChainCurve::PaperCurve) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int k = 0; k < n; ++k) {
      const double x = static_cast<double>(k) / n;
      const double a = two_pi * x * x;
      const double b = two_pi * x * x * x;
      w.col(k) << std::cos(a) * std::sin(b), std::sin(a) * std::sin(b),
          std::cos(b);
    }
  } else {
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int k = 0; k < n; ++k) {
      Vec3 v;
      do {
        v << g(rng), g(rng), g(rng);
      } while (v.norm() < 1e-6);
      w.col(k) = v.normalized();
    }
  }
  return w;
}

double spin_chain_hamiltonian(const ChainState& w) {
  const Eigen::Index n = w.cols();
  double h = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) h += w.col(i).dot(w.col((i + 1) % n));
  return h;
}

Vec3 total_spin(const ChainState& w) { return w.rowwise().sum(); }

// --- point vortices ---

void PointVortexSpec::validate() const {
  HypChainState{positions, strengths}.validate();
  for (Eigen::Index i = 0; i < positions.cols(); ++i) {
    const HypVec3 w = positions.col(i);
    if (std::abs(l_inner(w, w) + 1.0) > hyperboloid_tol) {
      throw Error(ErrorKind::InvalidArgument,
                  "PointVortexSpec: vortex " + std::to_string(i) +
                      " is off the hyperboloid w._L w = -1");
    }
  }
}

PointVortexSpec paper_w1() {
  PointVortexSpec s;
  s.positions.resize(3, 3);
  s.positions << -0.5000, -0.5000, 1.0000,
                  0.8660, -0.8660, -0.0000,
                  1.4142, 1.4142, 1.4142;
  s.strengths.resize(3);
  s.strengths << 0.5317, 0.0761, 1.0000;
  s.hyperboloid_tol = 5e-3;
  return s;
}

PointVortexSpec paper_w2() {
  PointVortexSpec s;
  s.positions.resize(3, 3);
  s.positions << 2.6000, 4.0000, 3.0000,
                 0.1923, 0.1250, 0.1667,
                 2.7923, 4.1250, 3.1667;
  s.strengths.resize(3);
  s.strengths << 0.0990, 0.8091, 1.0000;
  s.hyperboloid_tol = 5e-3;
  return s;
}

PointVortexSystem point_vortex_field(const PointVortexSpec& spec) {
  spec.validate();
  const Eigen::VectorXd gamma = spec.strengths;
  const auto pair_inner = [](const Eigen::Matrix3Xd& w, Eigen::Index i,
                             Eigen::Index j) {
    const double s = l_inner(w.col(i), w.col(j));
    if (std::abs(s) - 1.0 < kCollisionThreshold) {
      throw Error(ErrorKind::CollisionProximity,
                  "vortices " + std::to_string(i) + " and " +
                      std::to_string(j) + " are too close");
    }
    return s;
  };

  PointVortexSystem sys;
  sys.strengths = gamma;
  sys.field.b_fn = [gamma, pair_inner](const ChainState& w) {
    const Eigen::Index n = w.cols();
    if (n != gamma.size()) {
      throw Error(ErrorKind::DimensionMismatch, "vortex count vs strengths");
    }
    ChainState b = ChainState::Zero(3, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        if (i == j) continue;
        const double s = pair_inner(w, i, j);
        b.col(i) -= (gamma[j] / (s * s - 1.0)) * w.col(j);
      }
    }
    return ChainState(b / std::numbers::pi);
  };
  sys.hamiltonian = [gamma, pair_inner](const Eigen::Matrix3Xd& w) {
    double h = 0.0;
    for (Eigen::Index i = 0; i < w.cols(); ++i) {
      for (Eigen::Index j = 0; j < w.cols(); ++j) {
        if (i == j) continue;
        const double s = pair_inner(w, i, j);
        h += gamma[i] * gamma[j] * std::log((s + 1.0) / (s - 1.0));
      }
    }
    return -h / (4.0 * std::numbers::pi);
  };
  sys.field.hamiltonian = sys.hamiltonian;
  sys.momentum = [gamma](const Eigen::Matrix3Xd& w) -> Vec3 { return w * gamma; };
  return sys;
}

HypChainState point_vortex_initial_state(const PointVortexSpec& spec) {
  spec.validate();
  return {spec.positions, spec.strengths};
}

}  // namespace isospec

#include "isospec/sl2.hpp"

#include <cmath>
#include <string>

#include "isospec/error.hpp"

namespace isospec {
namespace {

constexpr double kTraceTolerance = 1e-12;

}  // namespace

void HypChainState::validate() const {
  if (particles.cols() < 1 || particles.cols() != strengths.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "HypChainState: need one strength per particle");
  }
  if (!particles.allFinite() || !strengths.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "HypChainState: non-finite entry");
  }
  for (Eigen::Index i = 0; i < strengths.size(); ++i) {
    if (strengths[i] == 0.0) {
      throw Error(ErrorKind::InvalidArgument,
                  "HypChainState: strength " + std::to_string(i) + " is zero");
    }
  }
}

HypVec3 sl2_to_vec(const SquareMatrix& w) {
  if (w.rows() != 2 || w.cols() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "sl2_to_vec needs a 2x2 matrix");
  }
  if (std::abs(w.trace()) > kTraceTolerance) {
    throw Error(ErrorKind::InvalidArgument, "sl2_to_vec: trace is not zero");
  }
  if (w.imag().cwiseAbs().maxCoeff() > kTraceTolerance) {
    throw Error(ErrorKind::InvalidArgument, "sl2_to_vec: matrix is not real");
  }
  const Eigen::Matrix2d r = w.real();
  return {r(0, 0), 0.5 * (r(0, 1) + r(1, 0)), 0.5 * (r(0, 1) - r(1, 0))};
}

SquareMatrix vec_to_sl2(const HypVec3& v) {
  SquareMatrix m(2, 2);
  m << v.x(), v.y() + v.z(),
       v.y() - v.z(), -v.x();
  return m;
}

HypVec3 l_product(const HypVec3& a, const HypVec3& b) {
  const Vec3 c = a.cross(b);
  return {2.0 * c.x(), 2.0 * c.y(), -2.0 * c.z()};
}

double l_inner(const HypVec3& a, const HypVec3& b) {
  return a.x() * b.x() + a.y() * b.y() - a.z() * b.z();
}

HypVec3 m_correction(const HypVec3& a, const HypVec3& b, const HypVec3& c) {
  const double a1 = a[0], a2 = a[1], a3 = a[2];
  const double b1 = b[0], b2 = b[1], b3 = b[2];
  const double c1 = c[0], c2 = c[1], c3 = c[2];
  // Entries (0,0), (0,1), (1,0) of the 2x2 product.
  const double p00 = c1 * (a1 * b1 + (b2 - b3) * (a2 + a3)) -
                     (c2 - c3) * (b1 * (a2 + a3) - a1 * (b2 + b3));
  const double p01 = c1 * (b1 * (a2 + a3) - a1 * (b2 + b3)) +
                     (c2 + c3) * (a1 * b1 + (b2 - b3) * (a2 + a3));
  const double p10 = c1 * (b1 * (a2 - a3) - a1 * (b2 - b3)) +
                     (c2 - c3) * (a1 * b1 + (b2 + b3) * (a2 - a3));
  return {p00, 0.5 * (p01 + p10), 0.5 * (p01 - p10)};
}

HypStepReport step_hyperbolic_midpoint(const HypField& field,
                                       const HypChainState& state, double h,
                                       const SolverConfig& cfg) {
  state.validate();
  if (!field.b_fn) throw Error(ErrorKind::InvalidArgument, "field has no b_fn");
  if (!std::isfinite(h)) {
    throw Error(ErrorKind::InvalidArgument, "step size must be finite");
  }
  const Eigen::Matrix3Xd& w_k = state.particles;
  const Eigen::Index n = w_k.cols();
  const double half = 0.5 * h;
  const double quarter_sq = 0.25 * h * h;
  Eigen::Matrix3Xd last_b;
  auto map = [&](const Eigen::VectorXd& v) {
    const Eigen::Map<const Eigen::Matrix3Xd> wt(v.data(), 3, n);
    last_b = field.b_fn(wt);
    if (last_b.cols() != n) {
      throw Error(ErrorKind::DimensionMismatch, "b_fn changed particle count");
    }
    Eigen::Matrix3Xd out(3, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const HypVec3 w = wt.col(i);
      const HypVec3 b = last_b.col(i);
      out.col(i) = w_k.col(i) + half * l_product(w, b) +
                   quarter_sq * m_correction(b, w, b);
    }
    return Eigen::VectorXd(out.reshaped());
  };
  SolveResult r =
      solve_fixed_point_problem(map, Eigen::VectorXd(w_k.reshaped()), cfg);
  Eigen::Matrix3Xd wt = Eigen::Map<const Eigen::Matrix3Xd>(r.x.data(), 3, n);
  Eigen::Matrix3Xd next(3, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const HypVec3 w = wt.col(i);
    const HypVec3 b = last_b.col(i);
    next.col(i) = w + half * l_product(w, b) - quarter_sq * m_correction(b, w, b);
  }
  return {HypChainState{std::move(next), state.strengths}, std::move(wt),
          r.iterations, r.residual};
}

}  // namespace isospec

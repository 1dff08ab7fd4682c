#include "isospec/vec3.hpp"

#include <cmath>
#include <string>

#include "isospec/error.hpp"

namespace isospec {
namespace {

void check_chain(const Vec3Field& field, const ChainState& w, double h) {
  if (!field.b_fn) throw Error(ErrorKind::InvalidArgument, "field has no b_fn");
  if (w.cols() < 1) {
    throw Error(ErrorKind::InvalidArgument, "chain needs at least one particle");
  }
  if (!w.allFinite() || !std::isfinite(h)) {
    throw Error(ErrorKind::InvalidArgument, "non-finite chain state or step");
  }
}

ChainState eval_b(const Vec3Field& field, const ChainState& w) {
  ChainState b = field.b_fn(w);
  if (b.cols() != w.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "b_fn returned " + std::to_string(b.cols()) +
                    " particles, expected " + std::to_string(w.cols()));
  }
  return b;
}

Eigen::Map<const ChainState> as_chain(const Eigen::VectorXd& v) {
  return {v.data(), 3, v.size() / 3};
}

Eigen::VectorXd as_vector(const ChainState& c) { return c.reshaped(); }

}  // namespace

SquareMatrix hat(const Vec3& w) {
  SquareMatrix m(3, 3);
  m << 0.0, -w.z(), w.y(),
       w.z(), 0.0, -w.x(),
       -w.y(), w.x(), 0.0;
  return m;
}

Vec3 vee(const SquareMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) {
    throw Error(ErrorKind::DimensionMismatch, "vee needs a 3x3 matrix");
  }
  const Eigen::Matrix3d r = m.real();
  return {0.5 * (r(2, 1) - r(1, 2)), 0.5 * (r(0, 2) - r(2, 0)),
          0.5 * (r(1, 0) - r(0, 1))};
}

ChainStepReport step_min_midpoint_r3(const Vec3Field& field,
                                     const ChainState& w_k, double h,
                                     const SolverConfig& cfg) {
  check_chain(field, w_k, h);
  const double half = 0.5 * h;
  const double quarter_sq = 0.25 * h * h;
  ChainState last_b;
  auto map = [&](const Eigen::VectorXd& v) {
    const auto wt = as_chain(v);
    last_b = eval_b(field, wt);
    ChainState out(3, wt.cols());
    for (Eigen::Index i = 0; i < wt.cols(); ++i) {
      const Vec3 w = wt.col(i);
      const Vec3 b = last_b.col(i);
      out.col(i) = w_k.col(i) + half * w.cross(b) - quarter_sq * b.dot(w) * b;
    }
    return as_vector(out);
  };
  SolveResult r = solve_fixed_point_problem(map, as_vector(w_k), cfg);
  ChainState wt = as_chain(r.x);
  ChainState next(3, wt.cols());
  for (Eigen::Index i = 0; i < wt.cols(); ++i) {
    const Vec3 w = wt.col(i);
    const Vec3 b = last_b.col(i);
    next.col(i) = w + half * w.cross(b) + quarter_sq * b.dot(w) * b;
  }
  return {std::move(next), std::move(wt), r.iterations, r.residual};
}

ChainStepReport step_spherical_midpoint(const Vec3Field& field,
                                        const ChainState& w_k, double h,
                                        const SolverConfig& cfg) {
  check_chain(field, w_k, h);
  const Eigen::Index n = w_k.cols();
  ChainState center(3, n);
  auto map = [&](const Eigen::VectorXd& v) {
    const auto z = as_chain(v);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Vec3 s = z.col(i) + w_k.col(i);
      const double s_norm = s.norm();
      if (s_norm < kAntipodalThreshold) {
        throw Error(ErrorKind::AntipodalDegeneracy,
                    "spherical midpoint: particle " + std::to_string(i) +
                        " is (nearly) antipodal to its update");
      }
      center.col(i) = std::sqrt(z.col(i).norm() * w_k.col(i).norm()) / s_norm * s;
    }
    const ChainState b = eval_b(field, center);
    ChainState out(3, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      out.col(i) = w_k.col(i) + h * Vec3(center.col(i)).cross(Vec3(b.col(i)));
    }
    return as_vector(out);
  };
  SolveResult r = solve_fixed_point_problem(map, as_vector(w_k), cfg);
  return {as_chain(r.x), std::move(center), r.iterations, r.residual};
}

ChainStepReport step_classical_midpoint(const Vec3Field& field,
                                        const ChainState& w_k, double h,
                                        const SolverConfig& cfg) {
  check_chain(field, w_k, h);
  const double half = 0.5 * h;
  auto map = [&](const Eigen::VectorXd& v) {
    const auto m = as_chain(v);
    const ChainState b = eval_b(field, m);
    ChainState out(3, m.cols());
    for (Eigen::Index i = 0; i < m.cols(); ++i) {
      out.col(i) = w_k.col(i) + half * Vec3(m.col(i)).cross(Vec3(b.col(i)));
    }
    return as_vector(out);
  };
  SolveResult r = solve_fixed_point_problem(map, as_vector(w_k), cfg);
  ChainState mid = as_chain(r.x);
  ChainState next = 2.0 * mid - w_k;
  return {std::move(next), std::move(mid), r.iterations, r.residual};
}

}  // namespace isospec

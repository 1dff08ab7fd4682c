#pragma once

// Small random flow problems with a known structure, shared by the unit tests
// and the acceptance runner.

#include <isospec/matrix.hpp>
#include <isospec/scheme.hpp>

#include <random>
#include <string>

namespace testutil {

struct Instance {
  std::string structure;
  isospec::FlowProblem problem;
  isospec::SquareMatrix w0;
  double h = 0.0;
};

enum class Structure { Symmetric, Skew, Sl2 };

inline Instance make_instance(Structure s, Eigen::Index n, double h,
                              std::mt19937_64& gen) {
  using isospec::SquareMatrix;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> pos(0.5, 1.5);
  const auto real_matrix = [&](Eigen::Index m) {
    SquareMatrix a(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
      for (Eigen::Index j = 0; j < m; ++j) a(i, j) = u(gen);
    return a;
  };

  Instance inst;
  inst.h = h;
  switch (s) {
    case Structure::Symmetric: {
      // double bracket flow with a random increasing diagonal N
      SquareMatrix nm = SquareMatrix::Zero(n, n);
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) nm(i, i) = acc += pos(gen);
      const SquareMatrix r = real_matrix(n);
      inst.structure = "symmetric";
      inst.w0 = (r + r.transpose()) / 2.0;
      inst.problem.dim = n;
      inst.problem.b_map = [nm](const SquareMatrix& w) -> SquareMatrix {
        return nm * w - w * nm;
      };
      break;
    }
    case Structure::Skew: {
      // rigid body with random positive weights
      Eigen::VectorXd d(n);
      for (Eigen::Index i = 0; i < n; ++i) d[i] = pos(gen);
      const SquareMatrix r = real_matrix(n);
      inst.structure = "skew";
      inst.w0 = (r - r.transpose()) / 2.0;
      inst.problem.dim = n;
      inst.problem.structure_j = isospec::identity(n);
      inst.problem.b_map = [d](const SquareMatrix& w) -> SquareMatrix {
        SquareMatrix b(w.rows(), w.cols());
        for (Eigen::Index i = 0; i < w.rows(); ++i)
          for (Eigen::Index j = 0; j < w.cols(); ++j)
            b(i, j) = -w(i, j) * 0.5 * (d[i] + d[j]);
        return b;
      };
      break;
    }
    case Structure::Sl2: {
      const double a = u(gen), b = u(gen), c = u(gen);
      SquareMatrix k(2, 2);
      k << a, b + c, b - c, -a;
      const double x = u(gen), y = u(gen), z = u(gen);
      SquareMatrix w(2, 2);
      w << x, y + z, y - z, -x;
      inst.structure = "sl2";
      inst.w0 = w;
      inst.problem.dim = 2;
      SquareMatrix j(2, 2);
      j << 0, -1, 1, 0;
      inst.problem.structure_j = j;
      inst.problem.b_map = [k](const SquareMatrix& w) -> SquareMatrix {
        return (k * w - w * k) + 0.25 * (w * w).trace() * k;
      };
      break;
    }
  }
  return inst;
}

}  // namespace testutil

#pragma once

#include <isospec/matrix.hpp>

#include <Eigen/Dense>
#include <complex>
#include <random>

namespace testutil {

using isospec::Complex;
using isospec::SquareMatrix;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng());
}

inline SquareMatrix random_complex(Eigen::Index n) {
  SquareMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(uniform(), uniform());
  return m;
}

inline SquareMatrix random_real(Eigen::Index n) {
  SquareMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = uniform();
  return m;
}

inline SquareMatrix random_skew(Eigen::Index n) {
  const SquareMatrix r = random_real(n);
  return (r - r.transpose()) / 2.0;
}

inline SquareMatrix random_symmetric(Eigen::Index n) {
  const SquareMatrix r = random_real(n);
  return (r + r.transpose()) / 2.0;
}

inline SquareMatrix random_skew_hermitian(Eigen::Index n) {
  const SquareMatrix r = random_complex(n);
  return (r - r.adjoint()) / 2.0;
}

inline SquareMatrix random_traceless_real2() {
  const double x = uniform(), y = uniform(), z = uniform();
  SquareMatrix m(2, 2);
  m << x, y + z, y - z, -x;
  return m;
}

inline Eigen::Vector3d random_vec3() {
  return {uniform(), uniform(), uniform()};
}

// a b - b a by explicit loops, kept free of Eigen products.
inline SquareMatrix loop_commutator(const SquareMatrix& a, const SquareMatrix& b) {
  const Eigen::Index n = a.rows();
  SquareMatrix c = SquareMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) s += a(i, k) * b(k, j) - b(i, k) * a(k, j);
      c(i, j) = s;
    }
  return c;
}

inline SquareMatrix loop_product(const SquareMatrix& a, const SquareMatrix& b) {
  const Eigen::Index n = a.rows();
  SquareMatrix c = SquareMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

inline double max_diff(const SquareMatrix& a, const SquareMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace testutil

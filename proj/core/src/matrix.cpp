#include "isospec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "isospec/error.hpp"

namespace isospec {
namespace {

void require_same_dim(const SquareMatrix& a, const SquareMatrix& b,
                      const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(op) + ": dimension mismatch (" +
                    std::to_string(a.rows()) + " vs " +
                    std::to_string(b.rows()) + ")");
  }
}

// Relative width inside which two real parts count as equal in spectrum_key.
constexpr double kRealPartTieTolerance = 1e-8;

}  // namespace

SquareMatrix make_matrix(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  SquareMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(ErrorKind::InvalidArgument,
                  "make_matrix: rows must have length " + std::to_string(n));
    }
    Eigen::Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  check_square_finite(m);
  return m;
}

void check_square_finite(const SquareMatrix& a) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    throw Error(ErrorKind::InvalidArgument,
                "matrix must be square with dim >= 1");
  }
  if (!a.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "matrix has non-finite entries");
  }
}

SquareMatrix identity(Eigen::Index n) { return SquareMatrix::Identity(n, n); }

SquareMatrix commutator(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

SquareMatrix conjugate_transpose(const SquareMatrix& a) { return a.adjoint(); }

Complex frobenius_inner(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "frobenius_inner");
  // Tr(a^dagger b) = sum_ij conj(a_ij) b_ij
  return (a.conjugate().cwiseProduct(b)).sum();
}

double max_abs(const SquareMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

SquareMatrix cayley(const SquareMatrix& a) {
  const auto n = a.rows();
  const SquareMatrix id = identity(n);
  Eigen::PartialPivLU<SquareMatrix> lu(id + a);
  const double rcond = lu.rcond();
  if (!(rcond > static_cast<double>(n) *
                    std::numeric_limits<double>::epsilon())) {
    throw SingularMatrixError("cayley: Id + a is singular",
                              rcond > 0.0 ? 1.0 / rcond
                                          : std::numeric_limits<double>::infinity());
  }
  // (Id - a) and (Id + a)^{-1} commute, so solving from the left is exact.
  return lu.solve(id - a);
}

SpectrumKey spectrum_key(const SquareMatrix& a) {
  check_square_finite(a);
  Eigen::ComplexEigenSolver<SquareMatrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::EigenNonConvergence,
                "spectrum_key: eigensolver did not converge");
  }
  std::vector<Complex> ev(solver.eigenvalues().begin(),
                          solver.eigenvalues().end());
  double radius = 0.0;
  for (const auto& z : ev) radius = std::max(radius, std::abs(z));
  const double tie = kRealPartTieTolerance * std::max(radius, 1e-300);

  std::stable_sort(ev.begin(), ev.end(), [](const Complex& x, const Complex& y) {
    return x.real() < y.real();
  });
  // Chain eigenvalues with nearly equal real parts into clusters and order each
  // cluster by imaginary part.
  auto first = ev.begin();
  while (first != ev.end()) {
    auto last = first + 1;
    while (last != ev.end() && last->real() - (last - 1)->real() <= tie) ++last;
    std::stable_sort(first, last, [](const Complex& x, const Complex& y) {
      return x.imag() < y.imag();
    });
    first = last;
  }
  return SpectrumKey{std::move(ev)};
}

std::vector<double> spectrum_drift(const SpectrumKey& a, const SpectrumKey& b) {
  if (a.eigenvalues.size() != b.eigenvalues.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "spectrum_drift: keys have different lengths");
  }
  std::vector<double> out(a.eigenvalues.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::abs(a.eigenvalues[k] - b.eigenvalues[k]);
  }
  return out;
}

double spectrum_distance(const SpectrumKey& a, const SpectrumKey& b) {
  const auto d = spectrum_drift(a, b);
  return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
}

bool in_quadratic_algebra(const SquareMatrix& w, const SquareMatrix& j,
                          double tol) {
  if (w.rows() != j.rows() || w.cols() != j.cols()) return false;
  return max_abs(SquareMatrix(w.adjoint() * j + j * w)) <= tol;
}

}  // namespace isospec

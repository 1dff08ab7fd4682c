#pragma once

// Dense complex square matrices and the Lie-algebraic primitives used by the
// integrators. Matrices are plain Eigen values; every function here is pure.

#include <complex>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace isospec {

using Complex = std::complex<double>;
using SquareMatrix = Eigen::MatrixXcd;

/// Eigenvalues sorted into a canonical order so that two spectra can be
/// compared pointwise.
struct SpectrumKey {
  std::vector<Complex> eigenvalues;
};

/// Builds a matrix from nested rows, rejecting ragged, empty, or non-finite
/// input.
SquareMatrix make_matrix(
    std::initializer_list<std::initializer_list<Complex>> rows);

/// Throws InvalidArgument unless `a` is a non-empty square matrix with finite
/// entries.
void check_square_finite(const SquareMatrix& a);

SquareMatrix identity(Eigen::Index n);

SquareMatrix commutator(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix conjugate_transpose(const SquareMatrix& a);

/// <a, b> = Tr(a^dagger b).
Complex frobenius_inner(const SquareMatrix& a, const SquareMatrix& b);

/// Largest entry magnitude.
double max_abs(const SquareMatrix& a);

/// Cayley transform (Id - a)(Id + a)^{-1}, computed with an LU solve against
/// Id + a. Throws SingularMatrixError when Id + a is numerically singular.
SquareMatrix cayley(const SquareMatrix& a);

/// Eigenvalues ordered by real part, then imaginary part. Real parts closer
/// than a small multiple of the spectral radius are treated as tied so that
/// round-off noise on purely imaginary (or purely real) spectra cannot permute
/// the key.
SpectrumKey spectrum_key(const SquareMatrix& a);

/// Per-eigenvalue distances |a_k - b_k| between two keys of equal length.
std::vector<double> spectrum_drift(const SpectrumKey& a, const SpectrumKey& b);

/// Max of spectrum_drift.
double spectrum_distance(const SpectrumKey& a, const SpectrumKey& b);

/// True iff max|w^dagger j + j w| <= tol.
bool in_quadratic_algebra(const SquareMatrix& w, const SquareMatrix& j,
                          double tol);

}  // namespace isospec

#include <doctest.h>

#include <isospec/error.hpp>
#include <isospec/matrix.hpp>

#include "helpers.hpp"

using namespace isospec;
using namespace testutil;

namespace {
const Complex I1(0.0, 1.0);
}

TEST_CASE("commutator") {
  SUBCASE("self commutator vanishes") {
    const auto a = random_complex(4);
    CHECK(max_abs(commutator(a, a)) == 0.0);
  }
  SUBCASE("nilpotent pair") {
    const auto a = make_matrix({{0, 1}, {0, 0}});
    const auto b = make_matrix({{0, 0}, {1, 0}});
    CHECK(max_diff(commutator(a, b), make_matrix({{1, 0}, {0, -1}})) == 0.0);
  }
  SUBCASE("triple loop") {
    for (int t = 0; t < 5; ++t) {
      const auto a = random_complex(5), b = random_complex(5);
      CHECK(max_diff(commutator(a, b), loop_commutator(a, b)) < 1e-14);
    }
  }
  SUBCASE("antisymmetric") {
    const auto a = random_complex(6), b = random_complex(6);
    CHECK(max_abs(SquareMatrix(commutator(a, b) + commutator(b, a))) <= 1e-14);
  }
  SUBCASE("jacobi") {
    const auto a = random_complex(6), b = random_complex(6), c = random_complex(6);
    const SquareMatrix j = commutator(a, commutator(b, c)) +
                           commutator(b, commutator(c, a)) +
                           commutator(c, commutator(a, b));
    CHECK(max_abs(j) <= 1e-12);
  }
  SUBCASE("dimension mismatch") {
    try {
      commutator(random_complex(2), random_complex(3));
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
  }
}

TEST_CASE("conjugate_transpose") {
  CHECK(max_diff(conjugate_transpose(identity(3)), identity(3)) == 0.0);
  const auto a = make_matrix({{0, I1}, {I1, 0}});
  CHECK(max_diff(conjugate_transpose(a), make_matrix({{0, -I1}, {-I1, 0}})) == 0.0);
  const auto r = random_complex(4);
  CHECK(max_diff(conjugate_transpose(conjugate_transpose(r)), r) == 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(conjugate_transpose(r)(i, j) == std::conj(r(j, i)));
}

TEST_CASE("frobenius_inner") {
  CHECK(frobenius_inner(identity(4), identity(4)) == Complex(4.0, 0.0));
  const auto a = random_complex(3), b = random_complex(3);
  const Complex aa = frobenius_inner(a, a);
  CHECK(aa.real() >= 0.0);
  CHECK(std::abs(aa.imag()) < 1e-15);
  Complex s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += std::conj(a(i, j)) * b(i, j);
  CHECK(std::abs(frobenius_inner(a, b) - s) < 1e-14);
  CHECK(std::abs(frobenius_inner(a, b) - (a.adjoint() * b).trace()) < 1e-14);
  CHECK_THROWS_AS(frobenius_inner(a, random_complex(2)), Error);
}

TEST_CASE("cayley") {
  CHECK(max_diff(cayley(SquareMatrix::Zero(3, 3)), identity(3)) == 0.0);

  SUBCASE("skew-Hermitian goes to unitary") {
    const auto a = random_skew_hermitian(5);
    const auto c = cayley(a);
    CHECK(max_diff(c.adjoint() * c, identity(5)) < 1e-12);
  }
  SUBCASE("quadratic group") {
    // sp(2): a^T J + J a = 0 for real traceless 2x2, J the symplectic form
    const auto j = make_matrix({{0, -1}, {1, 0}});
    const SquareMatrix a = random_traceless_real2() * 0.4;
    REQUIRE(in_quadratic_algebra(a, j, 1e-14));
    const auto c = cayley(a);
    CHECK(max_diff(c.adjoint() * j * c, j) < 1e-12);
  }
  SUBCASE("definition") {
    const SquareMatrix a = random_complex(4) * 0.3;
    const SquareMatrix expect =
        (identity(4) - a) * (identity(4) + a).inverse();
    CHECK(max_diff(cayley(a), expect) < 1e-12);
  }
  SUBCASE("cay(a) cay(-a) = Id") {
    const SquareMatrix a = random_complex(4) * 0.3;
    CHECK(max_diff(cayley(a) * cayley(-a), identity(4)) < 1e-12);
  }
  SUBCASE("singular") {
    const auto a = make_matrix({{-1, 0}, {0, 0.5}});
    try {
      cayley(a);
      FAIL("expected an error");
    } catch (const SingularMatrixError& e) {
      CHECK(e.kind() == ErrorKind::SingularMatrix);
      CHECK(e.condition_estimate() > 1e12);
    }
  }
}

TEST_CASE("spectrum_key") {
  SUBCASE("diagonal") {
    const auto k = spectrum_key(make_matrix({{3, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    REQUIRE(k.eigenvalues.size() == 3);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(k.eigenvalues[i] - double(i + 1)) < 1e-14);
  }
  SUBCASE("rotation generator") {
    const auto k = spectrum_key(make_matrix({{0, -1}, {1, 0}}));
    CHECK(std::abs(k.eigenvalues[0] - Complex(0, -1)) < 1e-14);
    CHECK(std::abs(k.eigenvalues[1] - Complex(0, 1)) < 1e-14);
  }
  SUBCASE("similarity invariance") {
    for (int t = 0; t < 5; ++t) {
      const auto a = random_complex(6);
      const SquareMatrix g = identity(6) + 0.3 * random_complex(6);
      const SquareMatrix b = g * a * g.inverse();
      CHECK(spectrum_distance(spectrum_key(a), spectrum_key(b)) < 1e-9);
    }
  }
  SUBCASE("skew spectrum with noisy real parts") {
    const auto w = random_skew(8);
    const SquareMatrix q = cayley(random_skew(8));
    const SquareMatrix v = q * w * q.transpose();
    CHECK(spectrum_distance(spectrum_key(w), spectrum_key(v)) < 1e-12);
  }
  SUBCASE("deterministic") {
    const auto a = random_complex(5);
    CHECK(spectrum_distance(spectrum_key(a), spectrum_key(a)) == 0.0);
  }
  SUBCASE("drift lengths must match") {
    CHECK_THROWS_AS(spectrum_drift(spectrum_key(identity(2)), spectrum_key(identity(3))), Error);
  }
  CHECK_THROWS_AS(spectrum_key(SquareMatrix(2, 3)), Error);
}

TEST_CASE("in_quadratic_algebra") {
  CHECK(in_quadratic_algebra(random_skew_hermitian(4), identity(4), 1e-14));
  CHECK(in_quadratic_algebra(make_matrix({{1, 0}, {0, -1}}),
                             make_matrix({{0, -1}, {1, 0}}), 1e-14));
  CHECK_FALSE(in_quadratic_algebra(identity(3), identity(3), 1e-6));
  CHECK_FALSE(in_quadratic_algebra(identity(3), identity(2), 1e-6));
}

TEST_CASE("make_matrix validation") {
  CHECK_THROWS_AS(make_matrix({{1, 2}, {3}}), Error);
  CHECK_THROWS_AS(make_matrix({{1, std::nan("")}, {0, 1}}), Error);
}

#include <doctest.h>

#include <isospec/diagnostics.hpp>
#include <isospec/error.hpp>
#include <isospec/scheme.hpp>
#include <isospec/systems.hpp>

#include <cmath>

#include "helpers.hpp"
#include "instances.hpp"

using namespace isospec;
using namespace testutil;

namespace {

FlowProblem constant_b(const SquareMatrix& omega) {
  FlowProblem p;
  p.dim = omega.rows();
  p.b_map = [omega](const SquareMatrix&) { return omega; };
  return p;
}

// Solves P X Q = W for X through the Kronecker form (Q^T (x) P) vec X = vec W.
SquareMatrix kron_solve(const SquareMatrix& p, const SquareMatrix& q,
                        const SquareMatrix& w) {
  const Eigen::Index n = w.rows();
  SquareMatrix k(n * n, n * n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      k.block(a * n, b * n, n, n) = q(b, a) * p;
  Eigen::VectorXcd rhs(n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) rhs[j * n + i] = w(i, j);
  const Eigen::VectorXcd x = k.fullPivLu().solve(rhs);
  SquareMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) out(i, j) = x[j * n + i];
  return out;
}

SolverConfig newton_cfg() {
  SolverConfig cfg;
  cfg.method = SolverMethod::Newton;
  return cfg;
}

}  // namespace

TEST_CASE("fixed_point_map") {
  const auto y = random_complex(3), x = random_complex(3), b = random_complex(3);
  CHECK(max_diff(fixed_point_map(y, x, b, 0.0), y) == 0.0);
  CHECK(max_diff(fixed_point_map(y, x, SquareMatrix::Zero(3, 3), 0.7), y) == 0.0);
  CHECK(max_diff(fixed_point_map(SquareMatrix::Zero(2, 2), identity(2), identity(2), 2.0),
                 identity(2)) == 0.0);
  const double h = 0.3;
  const SquareMatrix expect = y + 0.5 * h * loop_commutator(b, x) +
                              0.25 * h * h * loop_product(loop_product(b, x), b);
  CHECK(max_diff(fixed_point_map(y, x, b, h), expect) < 1e-14);
}

TEST_CASE("solve_stage") {
  SUBCASE("stationary flow") {
    FlowProblem p = constant_b(SquareMatrix::Zero(3, 3));
    const auto w = random_complex(3);
    const auto s = solve_stage(p, w, 0.1, SolverConfig{});
    CHECK(s.iters == 1);
    CHECK(max_diff(s.w_tilde, w) == 0.0);
  }
  SUBCASE("constant B against a Kronecker linear solve") {
    const auto omega = random_complex(2);
    const auto w = random_complex(2);
    const double h = 0.05;
    const SquareMatrix a = 0.5 * h * omega;
    const SquareMatrix oracle = kron_solve(identity(2) - a, identity(2) + a, w);
    for (auto cfg : {SolverConfig{}, newton_cfg()}) {
      const auto s = solve_stage(constant_b(omega), w, h, cfg);
      CHECK(max_diff(s.w_tilde, oracle) < 1e-12);
    }
  }
  SUBCASE("rigid body residual") {
    const RigidBodySpec spec{10};
    const auto p = rigid_body_problem(spec);
    const auto w0 = rigid_body_initial_state(spec);
    const auto s = solve_stage(p, w0, 0.1, newton_cfg());
    CHECK(s.residual <= 1e-13);
    const SquareMatrix b = p.b_map(s.w_tilde);
    const SquareMatrix half = 0.05 * b;
    const SquareMatrix back =
        loop_product(loop_product(identity(10) - half, s.w_tilde), identity(10) + half);
    CHECK(max_diff(back, w0) < 1e-12);
  }
  SUBCASE("divergence is reported") {
    FlowProblem p;
    p.dim = 2;
    p.b_map = [](const SquareMatrix& w) -> SquareMatrix { return 5.0 * w * w; };
    const auto w = make_matrix({{3, 1}, {-2, 4}});
    try {
      solve_stage(p, w, 1.0, SolverConfig{});
      FAIL("expected a solver error");
    } catch (const SolverError& e) {
      CHECK((e.kind() == ErrorKind::DivergenceDetected ||
             e.kind() == ErrorKind::NonConvergence));
    }
  }
  SUBCASE("bad input") {
    FlowProblem p = constant_b(identity(2));
    CHECK_THROWS_AS(solve_stage(p, random_complex(3), 0.1, SolverConfig{}), Error);
    CHECK_THROWS_AS(solve_stage(p, random_complex(2), std::nan(""), SolverConfig{}), Error);
  }
}

TEST_CASE("step") {
  SUBCASE("zero step") {
    auto inst = make_instance(Structure::Skew, 4, 0.1, rng());
    CHECK(max_diff(step(inst.problem, inst.w0, 0.0, SolverConfig{}).w_next, inst.w0) == 0.0);
  }
  SUBCASE("constant B is Cayley conjugation") {
    const auto omega = random_complex(3);
    const auto w = random_complex(3);
    const double h = 0.1;
    const SquareMatrix c = cayley(0.5 * h * omega);
    const SquareMatrix expect = c.inverse() * w * c;
    CHECK(max_diff(step(constant_b(omega), w, h, SolverConfig{}).w_next, expect) < 1e-12);
  }
  SUBCASE("rigid body step keeps the spectrum") {
    const RigidBodySpec spec{10};
    const auto p = rigid_body_problem(spec);
    const auto w0 = rigid_body_initial_state(spec);
    const auto r = step(p, w0, 0.1, newton_cfg());
    CHECK(spectrum_distance(spectrum_key(r.w_next), spectrum_key(w0)) <= 1e-11);
  }
  SUBCASE("averaging identity") {
    for (auto s : {Structure::Symmetric, Structure::Skew, Structure::Sl2}) {
      auto inst = make_instance(s, 3, 0.1, rng());
      const auto r = step(inst.problem, inst.w0, inst.h, SolverConfig{});
      const SquareMatrix b = inst.problem.b_map(r.w_tilde);
      const SquareMatrix rhs = 2.0 * r.w_tilde - 0.5 * inst.h * inst.h * b * r.w_tilde * b;
      CHECK(max_diff(inst.w0 + r.w_next, rhs) < 1e-12);
    }
  }
  SUBCASE("time reversal") {
    for (auto s : {Structure::Symmetric, Structure::Skew, Structure::Sl2}) {
      auto inst = make_instance(s, 3, 0.1, rng());
      const auto fwd = step(inst.problem, inst.w0, inst.h, SolverConfig{});
      const auto back = step(inst.problem, fwd.w_next, -inst.h, SolverConfig{});
      CHECK(max_diff(back.w_next, inst.w0) <= 100 * 1e-13);
    }
  }
  SUBCASE("structure closure") {
    for (auto s : {Structure::Skew, Structure::Sl2}) {
      auto inst = make_instance(s, 4, 0.1, rng());
      const SquareMatrix& j = *inst.problem.structure_j;
      REQUIRE(in_quadratic_algebra(inst.w0, j, 1e-13));
      const auto r = step(inst.problem, inst.w0, inst.h, SolverConfig{});
      CHECK(in_quadratic_algebra(r.w_tilde, j, 1e-11));
      CHECK(in_quadratic_algebra(r.w_next, j, 1e-11));
    }
  }
  SUBCASE("isospectral on random instances") {
    for (int t = 0; t < 10; ++t) {
      auto inst = make_instance(t % 2 ? Structure::Symmetric : Structure::Skew, 4, 0.1, rng());
      const auto r = step(inst.problem, inst.w0, inst.h, SolverConfig{});
      CHECK(spectrum_distance(spectrum_key(r.w_next), spectrum_key(inst.w0)) <= 1e-11);
    }
  }
}

TEST_CASE("step_cayley_form") {
  auto inst = make_instance(Structure::Skew, 4, 0.1, rng());
  CHECK(max_diff(step_cayley_form(inst.problem, inst.w0, inst.w0, 0.0), inst.w0) == 0.0);
  const auto r = step(inst.problem, inst.w0, inst.h, SolverConfig{});
  const auto c = step_cayley_form(inst.problem, inst.w0, r.w_tilde, inst.h);
  CHECK(max_diff(c, r.w_next) < 1e-12);

  // skew-Hermitian state and field stay skew-Hermitian
  const SquareMatrix w = random_skew_hermitian(3);
  const SquareMatrix k = random_skew_hermitian(3);
  FlowProblem p;
  p.dim = 3;
  p.b_map = [k](const SquareMatrix& x) -> SquareMatrix { return k + 0.3 * x; };
  const auto rs = step(p, w, 0.1, SolverConfig{});
  const auto cs = step_cayley_form(p, w, rs.w_tilde, 0.1);
  CHECK(max_abs(SquareMatrix(cs + cs.adjoint())) < 1e-12);
}

TEST_CASE("step_stage_form_oracle") {
  SUBCASE("stationary") {
    const auto w = random_complex(3);
    CHECK(max_diff(step_stage_form_oracle(constant_b(SquareMatrix::Zero(3, 3)), w, 0.1,
                                          SolverConfig{}),
                   w) == 0.0);
  }
  SUBCASE("rigid body n = 4") {
    const auto p = rigid_body_problem(RigidBodySpec{4});
    const auto w = random_skew(4);
    const auto a = step(p, w, 0.05, SolverConfig{}).w_next;
    const auto b = step_stage_form_oracle(p, w, 0.05, SolverConfig{});
    CHECK(max_diff(a, b) < 1e-10);
  }
  SUBCASE("brockett 3x3") {
    BrockettSpec spec;
    spec.n = 3;
    const auto p = brockett_problem(spec);
    const auto w = brockett_initial_state(spec.normalize());
    const auto a = step(p, w, 0.01, SolverConfig{}).w_next;
    const auto b = step_stage_form_oracle(p, w, 0.01, SolverConfig{});
    CHECK(max_diff(a, b) < 1e-10);
  }
}

TEST_CASE("second order") {
  const auto p = rigid_body_problem(RigidBodySpec{4});
  const SquareMatrix w0 = random_skew(4);
  const Stepper<SquareMatrix> stepper = [&](const SquareMatrix& w, double h) {
    const auto r = step(p, w, h, SolverConfig{});
    return StepOutcome<SquareMatrix>{r.w_next, r.iters};
  };
  const StateDistance<SquareMatrix> dist = [](const SquareMatrix& a, const SquareMatrix& b) {
    return (a - b).norm();
  };
  const auto est = estimate_order<SquareMatrix>(stepper, w0, 1.0, {0.2, 0.1, 0.05, 0.025},
                                                FineStepReference{8}, dist);
  CHECK(est.fitted_slope >= 1.8);
  CHECK(est.fitted_slope <= 2.2);
  for (std::size_t i = 1; i < est.max_errors.size(); ++i) {
    const double ratio = std::log2(est.max_errors[i - 1] / est.max_errors[i]);
    CHECK(ratio >= 1.8);
    CHECK(ratio <= 2.2);
  }
}

TEST_CASE("pack round trip") {
  const auto a = random_complex(4);
  CHECK(max_diff(unpack(pack(a), 4), a) == 0.0);
}

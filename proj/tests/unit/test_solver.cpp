#include <doctest.h>

#include <isospec/error.hpp>
#include <isospec/solver.hpp>

#include <cmath>

using namespace isospec;

TEST_CASE("fixed point iteration on a contraction") {
  // x = cos(x), componentwise
  const FixedPointMap map = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(x.array().cos());
  };
  SolverConfig cfg;
  cfg.max_iters = 500;
  const auto r = solve_fixed_point_problem(map, Eigen::VectorXd::Zero(3), cfg);
  CHECK(r.residual <= cfg.tol);
  CHECK(std::abs(r.x[0] - 0.7390851332151607) < 1e-12);
}

TEST_CASE("newton agrees with iteration") {
  const FixedPointMap map = [](const Eigen::VectorXd& x) {
    Eigen::VectorXd y(2);
    y << 0.5 * std::cos(x[1]), 0.25 + 0.1 * x[0] * x[0];
    return y;
  };
  SolverConfig fp;
  SolverConfig nt;
  nt.method = SolverMethod::Newton;
  const auto a = solve_fixed_point_problem(map, Eigen::VectorXd::Zero(2), fp);
  const auto b = solve_fixed_point_problem(map, Eigen::VectorXd::Zero(2), nt);
  CHECK((a.x - b.x).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(b.iterations < a.iterations);

  nt.jacobian_cache = std::make_shared<JacobianCache>();
  const auto c = solve_fixed_point_problem(map, Eigen::VectorXd::Zero(2), nt);
  CHECK((a.x - c.x).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(nt.jacobian_cache->refreshes() >= 1);
  const int before = nt.jacobian_cache->refreshes();
  solve_fixed_point_problem(map, Eigen::VectorXd::Constant(2, 0.1), nt);
  CHECK(nt.jacobian_cache->refreshes() - before <= 1);
}

TEST_CASE("last map evaluation is at the returned point") {
  Eigen::VectorXd last;
  const FixedPointMap map = [&](const Eigen::VectorXd& x) {
    last = x;
    return Eigen::VectorXd(0.5 * x.array() + 1.0);
  };
  for (auto method : {SolverMethod::FixedPoint, SolverMethod::Newton}) {
    SolverConfig cfg;
    cfg.method = method;
    const auto r = solve_fixed_point_problem(map, Eigen::VectorXd::Zero(2), cfg);
    CHECK(last == r.x);
  }
}

TEST_CASE("solver failures") {
  SUBCASE("divergence") {
    const FixedPointMap map = [](const Eigen::VectorXd& x) {
      return Eigen::VectorXd(3.0 * x.array() + 1.0);
    };
    try {
      solve_fixed_point_problem(map, Eigen::VectorXd::Zero(1), SolverConfig{});
      FAIL("expected divergence");
    } catch (const SolverError& e) {
      CHECK(e.kind() == ErrorKind::DivergenceDetected);
      CHECK(e.residual() > 1e6);
    }
  }
  SUBCASE("iteration cap") {
    const FixedPointMap map = [](const Eigen::VectorXd& x) {
      return Eigen::VectorXd(0.999 * x.array() + 1.0);
    };
    SolverConfig cfg;
    cfg.max_iters = 5;
    try {
      solve_fixed_point_problem(map, Eigen::VectorXd::Zero(1), cfg);
      FAIL("expected non-convergence");
    } catch (const SolverError& e) {
      CHECK(e.kind() == ErrorKind::NonConvergence);
      CHECK(e.iterations() == 5);
    }
  }
  SUBCASE("singular jacobian") {
    // G(x) = x - F(x) = x^2 + 1 has no root; Jacobian vanishes at x = 0
    const FixedPointMap map = [](const Eigen::VectorXd& x) {
      return Eigen::VectorXd(x.array() - x.array().square() - 1.0);
    };
    SolverConfig cfg;
    cfg.method = SolverMethod::Newton;
    cfg.newton_fd_step = 1e-30;
    try {
      solve_fixed_point_problem(map, Eigen::VectorXd::Zero(1), cfg);
      FAIL("expected a linear solve failure");
    } catch (const SolverError& e) {
      CHECK(e.kind() == ErrorKind::LinearSolveFailure);
    }
  }
  SUBCASE("invalid config") {
    SolverConfig cfg;
    cfg.tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = SolverConfig{};
    cfg.max_iters = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg = SolverConfig{};
    cfg.newton_fd_step = -1.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
  }
}

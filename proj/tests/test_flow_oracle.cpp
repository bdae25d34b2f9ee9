#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>

#include "eptctr/flow_oracle.hpp"
#include "eptctr/problems.hpp"

using namespace eptctr;

namespace {

// Random SPD quadratic f = (x - c)' A (x - c) / 2 with analytic derivatives.
Problem random_spd_quadratic(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> m(n * n);
  for (double& v : m) v = u(rng);
  auto a = std::make_shared<DenseSymMatrix>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += m[k * n + i] * m[k * n + j];
      (*a)(i, j) = (*a)(j, i) = acc + (i == j ? 0.5 : 0.0);
    }
  auto c = std::make_shared<DenseVector>(n);
  for (std::size_t i = 0; i < n; ++i) (*c)[i] = u(rng);

  Problem p;
  p.name = "random-spd-quadratic";
  p.dim = n;
  p.eval_f = [a, c](const DenseVector& x) {
    const DenseVector d = x - *c;
    return 0.5 * dot(d, a->matvec(d));
  };
  p.eval_g = [a, c](const DenseVector& x) { return a->matvec(x - *c); };
  p.eval_h = [a](const DenseVector&) { return *a; };
  p.default_x0 = DenseVector::constant(n, 2.0);
  return p;
}

}  // namespace

TEST(IntegrateNewtonFlow, ZeroHorizonKeepsOnlyTheStart) {
  Problem p = random_spd_quadratic(4, 11);
  const FlowTrajectory traj = integrate_newton_flow(p, p.default_x0, 0.0, 1e-3);
  ASSERT_EQ(traj.states.size(), 1u);
  EXPECT_TRUE(traj.states[0] == p.default_x0);
  EXPECT_EQ(traj.times[0], 0.0);
}

// On a quadratic the Newton flow's gradient decays exactly like e^{-t}; the
// Euler discretization reproduces the ratio within 2% at t = 1, h = 1e-4,
// both in norm and componentwise.
TEST(IntegrateNewtonFlow, GradientDecaysAtTheContinuousRate) {
  Problem p = random_spd_quadratic(10, 123);
  DenseVector x0 = p.default_x0;
  const DenseVector g0 = p.eval_g(x0);
  for (std::size_t i = 0; i < 10; ++i) ASSERT_GT(std::abs(g0[i]), 1e-3);

  const FlowTrajectory traj = integrate_newton_flow(p, x0, 1.0, 1e-4);
  ASSERT_EQ(traj.states.size(), 10001u);
  const double expected = std::exp(-1.0);
  EXPECT_NEAR(traj.residual_norms.back() / traj.residual_norms.front(), expected,
              0.02 * expected);

  const DenseVector g1 = p.eval_g(traj.states.back());
  for (std::size_t i = 0; i < 10; ++i)
    EXPECT_NEAR(g1[i] / g0[i], expected, 0.02 * expected) << "component " << i;
}

// f is non-increasing along the flow while the Hessian stays positive
// definite (checked on a short Rosenbrock trajectory near the start point).
TEST(IntegrateNewtonFlow, ObjectiveMonotoneAlongTrajectory) {
  Problem p = problem_by_name("rosenbrock", 2);
  const FlowTrajectory traj = integrate_newton_flow(p, p.default_x0, 0.2, 1e-3);
  double last = p.eval_f(traj.states.front());
  for (std::size_t i = 1; i < traj.states.size(); ++i) {
    const double f = p.eval_f(traj.states[i]);
    EXPECT_LE(f, last + 1e-12);
    last = f;
  }
}

TEST(IntegrateNewtonFlow, RejectsBadStepSizes) {
  Problem p = random_spd_quadratic(3, 5);
  EXPECT_THROW(integrate_newton_flow(p, p.default_x0, 1.0, 0.0), DomainError);
  EXPECT_THROW(integrate_newton_flow(p, p.default_x0, -1.0, 1e-3), DomainError);
}

// The linearization is exact on quadratics, so the explicit continuation
// step and the implicit Euler step coincide to rounding.
TEST(OneStepConsistency, ExactOnQuadratics) {
  for (std::uint32_t seed : {1u, 2u, 3u}) {
    Problem p = random_spd_quadratic(6, seed);
    EXPECT_LE(one_step_consistency(p, p.default_x0, 1e-3), 1e-10);
    EXPECT_LE(one_step_consistency(p, p.default_x0, 1e-4), 1e-10);
  }
}

TEST(OneStepConsistency, SecondOrderOnRosenbrock) {
  Problem p = problem_by_name("rosenbrock", 2);
  const DenseVector x{2.0, 2.0};
  const double d4 = one_step_consistency(p, x, 1e-4);
  EXPECT_LE(d4, 1e-6);
  const double d3 = one_step_consistency(p, x, 1e-3);
  const double ratio = d3 / d4;
  EXPECT_GE(ratio, 30.0);
  EXPECT_LE(ratio, 300.0);
}

#include <gtest/gtest.h>

#include <cmath>

#include "eptctr/baselines.hpp"
#include "eptctr/problems.hpp"

using namespace eptctr;

namespace {

void expect_accepted_f_strictly_decreasing(const std::vector<TraceRecord>& trace,
                                           double f0) {
  double last = f0;
  for (const TraceRecord& t : trace) {
    if (!t.accepted) continue;
    EXPECT_LT(t.f, last) << "iteration " << t.k;
    last = t.f;
  }
}

}  // namespace

// Newton solves a convex quadratic in one full step once the radius allows.
TEST(TrustRegionNewton, SphereConvergesInAFewIterations) {
  Problem p = problem_by_name("sphere", 10);
  const SolveReport report = trust_region_newton(p, p.default_x0, BaselineConfig{});
  EXPECT_EQ(report.status, SolveStatus::Converged);
  EXPECT_LE(report.iterations, 5);
  EXPECT_LE(report.g_inf_norm, 1e-6);
}

TEST(TrustRegionNewton, BoothReachesTheKnownMinimizer) {
  Problem p = problem_by_name("booth");
  const SolveReport report = trust_region_newton(p, p.default_x0, BaselineConfig{});
  ASSERT_EQ(report.status, SolveStatus::Converged);
  EXPECT_NEAR(report.x_final[0], 1.0, 1e-6);
  EXPECT_NEAR(report.x_final[1], 3.0, 1e-6);
}

TEST(TrustRegionNewton, RosenbrockTwoDims) {
  Problem p = problem_by_name("rosenbrock", 2);
  BaselineConfig cfg;
  cfg.record_trace = true;
  const SolveReport report = trust_region_newton(p, p.default_x0, cfg);
  EXPECT_EQ(report.status, SolveStatus::Converged);
  expect_accepted_f_strictly_decreasing(report.trace, p.eval_f(p.default_x0));
}

TEST(TrustRegionNewton, ExpiredDeadlineReportsTimeout) {
  Problem p = problem_by_name("rosenbrock", 8);
  const SolveReport report =
      trust_region_newton(p, p.default_x0, BaselineConfig{}, Clock::now());
  EXPECT_EQ(report.status, SolveStatus::TimeLimit);
}

TEST(BfgsLinesearch, SphereConverges) {
  Problem p = problem_by_name("sphere", 10);
  const SolveReport report = bfgs_linesearch(p, p.default_x0, BaselineConfig{});
  EXPECT_EQ(report.status, SolveStatus::Converged);
  EXPECT_LE(report.g_inf_norm, 1e-6);
}

TEST(BfgsLinesearch, MatyasReachesTheOrigin) {
  Problem p = problem_by_name("matyas");
  const SolveReport report = bfgs_linesearch(p, p.default_x0, BaselineConfig{});
  ASSERT_EQ(report.status, SolveStatus::Converged);
  EXPECT_NEAR(report.x_final[0], 0.0, 1e-6);
  EXPECT_NEAR(report.x_final[1], 0.0, 1e-6);
}

// Convergence is not guaranteed on Beale from (2,2); the run must still
// terminate with a definite status.
TEST(BfgsLinesearch, BealeTerminatesWithAStatus) {
  Problem p = problem_by_name("beale");
  BaselineConfig cfg;
  cfg.record_trace = true;
  const SolveReport report = bfgs_linesearch(p, p.default_x0, cfg);
  EXPECT_TRUE(report.status == SolveStatus::Converged ||
              report.status == SolveStatus::MaxIterations ||
              report.status == SolveStatus::StepFailure);
  expect_accepted_f_strictly_decreasing(report.trace, p.eval_f(p.default_x0));
}

TEST(BfgsLinesearch, MonotoneDescentOnRosenbrock) {
  Problem p = problem_by_name("rosenbrock", 6);
  BaselineConfig cfg;
  cfg.record_trace = true;
  const SolveReport report = bfgs_linesearch(p, p.default_x0, cfg);
  EXPECT_EQ(report.status, SolveStatus::Converged);
  expect_accepted_f_strictly_decreasing(report.trace, p.eval_f(p.default_x0));
}

TEST(BaselineConfig, Validation) {
  BaselineConfig cfg;
  cfg.armijo_c = 1.5;
  EXPECT_THROW(cfg.validate(), DomainError);
  BaselineConfig cfg2;
  cfg2.backtrack_factor = 0.0;
  EXPECT_THROW(cfg2.validate(), DomainError);
}

// Identical termination test and counter semantics as the main solver.
TEST(Baselines, CounterSemanticsMatchOnQuadratics) {
  Problem p = problem_by_name("sphere", 5);
  const SolveReport tr = trust_region_newton(p, p.default_x0, BaselineConfig{});
  EXPECT_EQ(tr.f_evals, tr.iterations + 1);  // one trial per iteration, none rejected
  EXPECT_EQ(tr.g_evals, tr.iterations + 1);  // initial gradient plus one per accept
  EXPECT_EQ(tr.hessian_evals, tr.iterations);

  const SolveReport qn = bfgs_linesearch(p, p.default_x0, BaselineConfig{});
  EXPECT_EQ(qn.hessian_evals, 0);
  EXPECT_GE(qn.f_evals, qn.iterations + 1);
  EXPECT_EQ(qn.g_evals, qn.iterations + 1);
}

// Acceptance suite: one test per release criterion, each printing a
// [criterion N] PASS/FAIL line. The solver suites over the mandatory
// catalog are built once and shared.

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>

#include "eptctr/eptctr.hpp"

using namespace eptctr;

namespace {

struct CriterionReporter {
  int number;
  const char* label;
  ~CriterionReporter() {
    std::printf("[criterion %d] %s - %s\n",
                number, ::testing::Test::HasFailure() ? "FAIL" : "PASS", label);
    std::fflush(stdout);
  }
};

struct SuiteData {
  SuiteReport eptctr_runs;
  SuiteReport tr_runs;
  SuiteReport bfgs_runs;
};

const SuiteData& mandatory_runs() {
  static const SuiteData data = [] {
    SuiteData d;
    SuiteOptions opts;
    opts.problems = {"mandatory"};
    opts.record_trace = true;
    opts.time_limit_s = 60.0;

    opts.methods = {"eptctr"};
    d.eptctr_runs = run_suite(opts);  // serial, so wall times are honest

    opts.parallel = 2;
    opts.methods = {"trust-region"};
    d.tr_runs = run_suite(opts);
    opts.methods = {"bfgs"};
    d.bfgs_runs = run_suite(opts);
    return d;
  }();
  return data;
}

int converged_count(const SuiteReport& report) {
  int n = 0;
  for (const BenchmarkRecord& r : report.records) n += r.status == "Converged";
  return n;
}

const BenchmarkRecord* find_record(const SuiteReport& report, const std::string& name) {
  for (const BenchmarkRecord& r : report.records)
    if (r.problem == name) return &r;
  return nullptr;
}

// Dense oracle for the rank-two inverse, independent of apply_lbfgs_inverse.
DenseSymMatrix lbfgs_inverse_dense(const CurvaturePair& pair) {
  const DenseVector& s = pair.s_prev;
  const DenseVector& y = pair.y_prev;
  const double ys = dot(y, s);
  const double yy = dot(y, y);
  const std::size_t n = s.size();
  DenseSymMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = (i == j ? 1.0 : 0.0) - (y[i] * s[j] + s[i] * y[j]) / ys +
                2.0 * yy / (ys * ys) * s[i] * s[j];
  return h;
}

struct PairSampler {
  std::mt19937 rng;
  std::uniform_real_distribution<double> u{-1.0, 1.0};
  explicit PairSampler(std::uint32_t seed) : rng(seed) {}

  DenseVector vec(std::size_t n) {
    DenseVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u(rng);
    return v;
  }

  // Pairs passing the theta test, capped in conditioning so the double
  // precision eigenvalue verification below stays meaningful.
  CurvaturePair draw(std::size_t n, double theta = 1e-6, double cond_cap = 1e2) {
    for (;;) {
      DenseVector s = vec(n);
      DenseVector y = (rng() % 2 == 0) ? vec(n) : s + 0.3 * vec(n);
      const double ys = dot(y, s);
      if (std::abs(ys) <= theta * dot(s, s)) continue;
      if (dot(y, y) * dot(s, s) / (ys * ys) > cond_cap) continue;
      return CurvaturePair{std::move(s), std::move(y)};
    }
  }
};

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

// 1. Eptctr with the default configuration converges on at least 90% of the
//    mandatory catalog within 60 s per problem; rosenbrock(1000) needs at
//    most 111 iterations and sphere(1000) at most 42.
TEST(Acceptance, C01_ConvergenceCoverage) {
  CriterionReporter rep{1, "convergence coverage over the mandatory catalog"};
  const SuiteReport& runs = mandatory_runs().eptctr_runs;
  const int total = int(runs.records.size());
  ASSERT_EQ(total, 25);
  const int converged = converged_count(runs);
  EXPECT_GE(converged * 10, total * 9) << "converged " << converged << "/" << total;
  for (const BenchmarkRecord& r : runs.records) {
    EXPECT_LE(r.wall_time_s, 60.0) << r.problem;
    if (r.status == "Converged") {
      EXPECT_LE(r.final_g_inf, 1e-6) << r.problem;
    }
  }
  const BenchmarkRecord* rosen = find_record(runs, "rosenbrock");
  ASSERT_NE(rosen, nullptr);
  EXPECT_EQ(rosen->status, "Converged");
  EXPECT_LE(rosen->iterations, 111);
  const BenchmarkRecord* sphere = find_record(runs, "sphere");
  ASSERT_NE(sphere, nullptr);
  EXPECT_EQ(sphere->status, "Converged");
  EXPECT_LE(sphere->iterations, 42);
  std::printf("  coverage %d/%d, rosenbrock %ld iters, sphere %ld iters\n", converged,
              total, rosen->iterations, sphere->iterations);
}

// 2. Spectral properties of the rank-two inverse over >= 1000 random pairs
//    passing the curvature test, in at most 10 seconds.
TEST(Acceptance, C02_RankTwoInverseSpectralSuite) {
  CriterionReporter rep{2, "rank-two inverse eigenstructure (1000 random pairs)"};
  const auto t0 = Clock::now();
  PairSampler sampler(31415);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3 + t % 18;
    const CurvaturePair pair = sampler.draw(n);
    const DenseSymMatrix h = lbfgs_inverse_dense(pair);
    ASSERT_LE(h.max_asymmetry(), 1e-12);
    const auto vals = sym_eigenvalues(h);
    ASSERT_GT(vals.front(), 0.5 - 1e-10);
    int near_one = 0;
    for (double v : vals) near_one += std::abs(v - 1.0) <= 1e-8;
    ASSERT_GE(near_one, int(n) - 2);
    ASSERT_NEAR(1.0 / vals.front() + 1.0 / vals.back(), 2.0, 1e-8);
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  EXPECT_LE(elapsed, 10.0);
  std::printf("  1000 pairs in %.2f s\n", elapsed);
}

// 3. Scaling quasi-Newton property on the same trial distribution.
TEST(Acceptance, C03_ScalingSecantProperty) {
  CriterionReporter rep{3, "scaling secant property H y = (y'y/y's) s"};
  PairSampler sampler(31415);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3 + t % 18;
    const CurvaturePair pair = sampler.draw(n);
    ASSERT_LE(scaling_secant_check(pair), 1e-10 * pair.y_prev.norm2());
  }
}

// 4. Matrix-free application equals the dense-oracle product on all trials.
TEST(Acceptance, C04_MatrixFreeDenseEquivalence) {
  CriterionReporter rep{4, "matrix-free application matches the dense oracle"};
  PairSampler sampler(27182);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 3 + t % 18;
    const CurvaturePair pair = sampler.draw(n);
    const DenseVector g = sampler.vec(n);
    const DenseVector fast = apply_lbfgs_inverse(pair, g);
    const DenseVector dense = lbfgs_inverse_dense(pair).matvec(g);
    ASSERT_LE((fast - dense).norm2(), 1e-12 * g.norm2());
  }
}

// 5. The measurement function is stationary and grid-minimal at
//    (lambda, sigma) = (1, y's/||y||^2) for 100 random valid pairs.
TEST(Acceptance, C05_MeasurementFunctionOptimum) {
  CriterionReporter rep{5, "measurement function optimum at (1, y's/y'y)"};
  PairSampler sampler(16180);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + t % 18;
    CurvaturePair pair = sampler.draw(n);
    if (dot(pair.y_prev, pair.s_prev) <= 0.0) pair.y_prev = -pair.y_prev;
    const double ys = dot(pair.y_prev, pair.s_prev);
    const double yy = dot(pair.y_prev, pair.y_prev);
    const double sig_opt = ys / yy;
    const double h = 1e-6;
    const double dlam = (measurement_phi(1.0 + h, sig_opt, pair, n) -
                         measurement_phi(1.0 - h, sig_opt, pair, n)) /
                        (2.0 * h);
    const double dsig = (measurement_phi(1.0, sig_opt * (1.0 + h), pair, n) -
                         measurement_phi(1.0, sig_opt * (1.0 - h), pair, n)) /
                        (2.0 * h * sig_opt);
    ASSERT_LE(std::hypot(dlam, dsig), 1e-6);
    const double phi_opt = measurement_phi(1.0, sig_opt, pair, n);
    for (int i = 0; i < 50; ++i) {
      const double lam = std::exp(std::log(0.25) + double(i) / 49.0 * std::log(16.0));
      for (int j = 0; j < 50; ++j) {
        const double sig =
            sig_opt * std::exp(std::log(0.25) + double(j) / 49.0 * std::log(16.0));
        ASSERT_GE(measurement_phi(lam, sig, pair, n),
                  phi_opt - 1e-12 * (1.0 + std::abs(phi_opt)));
      }
    }
  }
}

// 6. Explicit Euler on the Newton flow of a random SPD quadratic reproduces
//    the e^{-t} gradient decay within 2%, componentwise as well.
TEST(Acceptance, C06_NewtonFlowDecay) {
  CriterionReporter rep{6, "Newton flow gradient decay at rate e^{-t}"};
  Problem p = random_spd_quadratic(10, 123);
  const DenseVector g0 = p.eval_g(p.default_x0);
  for (std::size_t i = 0; i < 10; ++i) {
    ASSERT_GT(std::abs(g0[i]), 1e-3);
  }
  const FlowTrajectory traj = integrate_newton_flow(p, p.default_x0, 1.0, 1e-4);
  const double expected = std::exp(-1.0);
  ASSERT_NEAR(traj.residual_norms.back() / traj.residual_norms.front(), expected,
              0.02 * expected);
  const DenseVector g1 = p.eval_g(traj.states.back());
  for (std::size_t i = 0; i < 10; ++i)
    ASSERT_NEAR(g1[i] / g0[i], expected, 0.02 * expected);
}

// 7. The explicit continuation step is consistent with the implicit Euler
//    step: exact on quadratics, second-order accurate on Rosenbrock.
TEST(Acceptance, C07_ImplicitEulerConsistency) {
  CriterionReporter rep{7, "implicit Euler one-step consistency"};
  for (std::uint32_t seed : {1u, 2u, 3u}) {
    Problem q = random_spd_quadratic(6, seed);
    ASSERT_LE(one_step_consistency(q, q.default_x0, 1e-3), 1e-10);
  }
  Problem rosen = problem_by_name("rosenbrock", 2);
  const DenseVector x{2.0, 2.0};
  const double d4 = one_step_consistency(rosen, x, 1e-4);
  const double d3 = one_step_consistency(rosen, x, 1e-3);
  ASSERT_LE(d4, 1e-6);
  const double ratio = d3 / d4;
  ASSERT_GE(ratio, 30.0);
  ASSERT_LE(ratio, 300.0);
  std::printf("  discrepancy %.3e at dt=1e-4, refinement ratio %.1f\n", d4, ratio);
}

// 8. The three time-step branches, and the rejection path leaving the state
//    bit-identical with dt halved.
TEST(Acceptance, C08_TrustRegionUpdating) {
  CriterionReporter rep{8, "time-step update branches and rejection bookkeeping"};
  SolverConfig cfg;
  ASSERT_DOUBLE_EQ(update_dt(1.0, 1.0, cfg), 2.0);
  ASSERT_DOUBLE_EQ(update_dt(1.0, 0.5, cfg), 1.0);
  ASSERT_DOUBLE_EQ(update_dt(1.0, -1.0, cfg), 0.5);

  const DenseVector x0{2.0, 2.0};
  Problem spike;
  spike.name = "spike";
  spike.dim = 2;
  spike.eval_f = [x0](const DenseVector& x) { return x == x0 ? 0.5 * dot(x, x) : 1e300; };
  spike.eval_g = [](const DenseVector& x) { return x; };
  spike.eval_h = [](const DenseVector& x) { return DenseSymMatrix::identity(x.size()); };
  spike.default_x0 = x0;
  EvalCounters counters;
  IterateState state = eptctr_init(spike, x0, cfg, counters);
  const DenseVector xb = state.x;
  const double fb = state.f_val;
  const DenseVector gb = state.g;
  const DenseVector snb = state.s_newton;
  const double dtb = state.dt;
  const StepResult res = eptctr_step(state, spike, cfg, counters);
  ASSERT_FALSE(res.accepted);
  ASSERT_TRUE(state.x == xb);
  ASSERT_EQ(state.f_val, fb);
  ASSERT_TRUE(state.g == gb);
  ASSERT_TRUE(state.s_newton == snb);
  ASSERT_DOUBLE_EQ(state.dt, 0.5 * dtb);
}

// 9. Monotone descent of accepted objective values on every suite run.
TEST(Acceptance, C09_MonotoneDescent) {
  CriterionReporter rep{9, "monotone descent of accepted objective values"};
  const SuiteData& d = mandatory_runs();
  for (const SuiteReport* suite : {&d.eptctr_runs, &d.tr_runs, &d.bfgs_runs}) {
    for (const BenchmarkRecord& r : suite->records) {
      const Problem p = problem_by_name(r.problem, r.n);
      double last = p.eval_f(p.default_x0);
      for (const TraceRecord& t : r.trace) {
        if (!t.accepted) continue;
        ASSERT_LT(t.f, last) << r.problem << " / " << r.method << " iteration " << t.k;
        last = t.f;
      }
    }
  }
}

// 10. Every cataloged analytic gradient agrees with central differences.
TEST(Acceptance, C10_GradientCatalogSelfCheck) {
  CriterionReporter rep{10, "gradient self-check across the whole catalog"};
  for (const CatalogEntry& e : catalog_entries()) {
    const std::size_t n =
        e.parametric ? std::min<std::size_t>(e.default_dim, 60) : e.default_dim;
    const Problem p = e.make(n);
    const double err = gradient_selfcheck(p, 10, 20250806);
    EXPECT_LE(err, 1e-4) << p.name;
  }
}

// 11. Robustness: the continuation solver converges on at least as many
//     mandatory problems as each baseline under the same budget.
TEST(Acceptance, C11_RelativeBaselineComparison) {
  CriterionReporter rep{11, "success count >= each baseline's"};
  const SuiteData& d = mandatory_runs();
  const int ours = converged_count(d.eptctr_runs);
  const int tr = converged_count(d.tr_runs);
  const int qn = converged_count(d.bfgs_runs);
  EXPECT_GE(ours, tr);
  EXPECT_GE(ours, qn);
  std::printf("  eptctr %d, trust-region %d, bfgs %d (out of %zu)\n", ours, tr, qn,
              d.eptctr_runs.records.size());
}

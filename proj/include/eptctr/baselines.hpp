#ifndef EPTCTR_BASELINES_HPP
#define EPTCTR_BASELINES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "eptctr/matrix.hpp"
#include "eptctr/problem.hpp"
#include "eptctr/solver.hpp"
#include "eptctr/vector.hpp"

namespace eptctr {

/// Settings shared by the two comparison solvers. They terminate on the
/// same gradient infinity-norm test as the continuation method so the
/// benchmark rows are directly comparable.
struct BaselineConfig {
  double grad_tol = 1e-6;
  long max_iter = 0;  // 0 selects 10 n + 1000
  double tr_radius0 = 1.0;
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;
  double fd_eps = 1e-6;
  bool record_trace = false;

  void validate() const {
    if (!(grad_tol > 0.0)) throw DomainError("BaselineConfig: grad_tol must be positive");
    if (!(armijo_c > 0.0 && armijo_c < 1.0))
      throw DomainError("BaselineConfig: need 0 < armijo_c < 1");
    if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0))
      throw DomainError("BaselineConfig: need 0 < backtrack_factor < 1");
    if (!(tr_radius0 > 0.0)) throw DomainError("BaselineConfig: tr_radius0 must be positive");
  }

  long resolved_max_iter(std::size_t n) const {
    return max_iter > 0 ? max_iter : long(10 * n + 1000);
  }
};

namespace detail {

/// Dogleg step for the model g'p + 0.5 p'(B + shift I)p within the radius.
inline DenseVector dogleg_step(const DenseVector& p_newton, const DenseVector& g,
                               const DenseSymMatrix& B, double shift, double radius) {
  const double pn_norm = p_newton.norm2();
  if (pn_norm <= radius) return p_newton;
  const double gg = dot(g, g);
  double gBg = dot(g, B.matvec(g)) + shift * gg;
  const double g_norm = std::sqrt(gg);
  if (!(gBg > 0.0)) return (-radius / g_norm) * g;
  DenseVector p_cauchy = (-gg / gBg) * g;
  const double pc_norm = p_cauchy.norm2();
  if (pc_norm >= radius) return (-radius / g_norm) * g;
  const DenseVector d = p_newton - p_cauchy;
  const double a = dot(d, d);
  const double b = dot(p_cauchy, d);
  const double c = pc_norm * pc_norm - radius * radius;
  const double tau = (-b + std::sqrt(std::max(b * b - a * c, 0.0))) / a;
  DenseVector p = p_cauchy;
  p.axpy(tau, d);
  return p;
}

}  // namespace detail

/// Dogleg trust-region Newton with the same Hessian source (analytic or
/// forward differences) and termination test as the continuation solver.
inline SolveReport trust_region_newton(const Problem& problem, const DenseVector& x0,
                                       const BaselineConfig& cfg, Deadline deadline = {}) {
  cfg.validate();
  const auto t0 = Clock::now();
  EvalCounters counters;
  SolveReport report;
  long regularized = 0;

  DenseVector x = x0;
  double f = problem.eval_f(x);
  counters.f_evals += 1;
  DenseVector g = problem.eval_g(x);
  counters.g_evals += 1;

  auto finish = [&](SolveStatus status, long k) {
    report.status = status;
    report.x_final = x;
    report.f_final = f;
    report.g_inf_norm = g.norm_inf();
    report.iterations = k;
    report.f_evals = counters.f_evals;
    report.g_evals = counters.g_evals;
    report.hessian_evals = counters.hessian_evals;
    report.regularized_solves = regularized;
    report.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
  };

  if (!std::isfinite(f) || !g.all_finite())
    return finish(SolveStatus::NonFiniteEvaluation, 0);

  const long max_iter = cfg.resolved_max_iter(problem.dim);
  double radius = cfg.tr_radius0;
  DenseSymMatrix B;
  DenseVector p_newton;
  double shift = 0.0;
  bool model_fresh = false;

  long k = 0;
  for (;;) {
    if (g.norm_inf() <= cfg.grad_tol) return finish(SolveStatus::Converged, k);
    if (k >= max_iter) return finish(SolveStatus::MaxIterations, k);
    if (deadline && Clock::now() >= *deadline) return finish(SolveStatus::TimeLimit, k);

    try {
      if (!model_fresh) {
        B = evaluate_hessian(problem, x, cfg.fd_eps);
        counters.hessian_evals += 1;
        const SpdFactorization fac = SpdFactorization::compute(B);
        shift = fac.shift();
        if (fac.regularized()) regularized += 1;
        p_newton = fac.solve(-g);
        model_fresh = true;
      }
    } catch (const SingularSystem&) {
      return finish(SolveStatus::LinearAlgebraFailure, k);
    } catch (const NonFiniteEvaluation&) {
      return finish(SolveStatus::NonFiniteEvaluation, k);
    }

    const DenseVector p = detail::dogleg_step(p_newton, g, B, shift, radius);
    const DenseVector x_trial = x + p;
    const double f_trial = problem.eval_f(x_trial);
    counters.f_evals += 1;
    const DenseVector Bp = B.matvec(p);
    const double predicted = -(dot(g, p) + 0.5 * (dot(p, Bp) + shift * dot(p, p)));

    double rho = std::numeric_limits<double>::quiet_NaN();
    bool accepted = false;
    if (std::isfinite(f_trial) && predicted > 0.0) {
      rho = (f - f_trial) / predicted;
      accepted = rho > 1e-4;
    }

    const double p_norm = p.norm2();
    if (accepted) {
      x = x_trial;
      f = f_trial;
      g = problem.eval_g(x);
      counters.g_evals += 1;
      model_fresh = false;
      if (!g.all_finite()) return finish(SolveStatus::NonFiniteEvaluation, k + 1);
    } else {
      report.rejected_steps += 1;
    }

    if (!(rho >= 0.25)) {
      radius *= 0.25;
    } else if (rho > 0.75 && p_norm >= 0.8 * radius) {
      radius = std::min(2.0 * radius, 1e10);
    }

    if (cfg.record_trace)
      report.trace.push_back(
          TraceRecord{k, f, g.norm_inf(), radius, rho, accepted, PrecondMode::HESSIAN});
    ++k;

    if (radius < 1e-14 * (1.0 + x.norm2())) return finish(SolveStatus::StepFailure, k);
  }
}

/// BFGS with the inverse-Hessian update and Armijo backtracking from a unit
/// step. The inverse estimate is rescaled before its first update and reset
/// to the identity if a direction loses descent.
inline SolveReport bfgs_linesearch(const Problem& problem, const DenseVector& x0,
                                   const BaselineConfig& cfg, Deadline deadline = {}) {
  cfg.validate();
  const auto t0 = Clock::now();
  EvalCounters counters;
  SolveReport report;

  const std::size_t n = problem.dim;
  DenseVector x = x0;
  double f = problem.eval_f(x);
  counters.f_evals += 1;
  DenseVector g = problem.eval_g(x);
  counters.g_evals += 1;

  auto finish = [&](SolveStatus status, long k) {
    report.status = status;
    report.x_final = x;
    report.f_final = f;
    report.g_inf_norm = g.norm_inf();
    report.iterations = k;
    report.f_evals = counters.f_evals;
    report.g_evals = counters.g_evals;
    report.hessian_evals = counters.hessian_evals;
    report.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
  };

  if (!std::isfinite(f) || !g.all_finite())
    return finish(SolveStatus::NonFiniteEvaluation, 0);

  DenseSymMatrix H = DenseSymMatrix::identity(n);
  bool first_update = true;
  const long max_iter = cfg.resolved_max_iter(n);

  long k = 0;
  for (;;) {
    if (g.norm_inf() <= cfg.grad_tol) return finish(SolveStatus::Converged, k);
    if (k >= max_iter) return finish(SolveStatus::MaxIterations, k);
    if (deadline && Clock::now() >= *deadline) return finish(SolveStatus::TimeLimit, k);

    DenseVector p = -H.matvec(g);
    double gtp = dot(g, p);
    if (!(gtp < 0.0)) {
      H = DenseSymMatrix::identity(n);
      first_update = true;
      p = -g;
      gtp = dot(g, p);
      if (!(gtp < 0.0)) return finish(SolveStatus::Converged, k);
    }

    double alpha = 1.0;
    double f_trial = f;
    DenseVector x_trial;
    bool found = false;
    while (alpha >= 1e-16) {
      x_trial = x;
      x_trial.axpy(alpha, p);
      f_trial = problem.eval_f(x_trial);
      counters.f_evals += 1;
      // strict decrease keeps accepted objective values monotone even when
      // the Armijo margin rounds to zero
      if (f_trial <= f + cfg.armijo_c * alpha * gtp && f_trial < f) {
        found = true;
        break;
      }
      alpha *= cfg.backtrack_factor;
    }
    if (!found) return finish(SolveStatus::StepFailure, k);

    DenseVector g_new = problem.eval_g(x_trial);
    counters.g_evals += 1;
    if (!g_new.all_finite()) {
      x = x_trial;
      f = f_trial;
      g = g_new;
      return finish(SolveStatus::NonFiniteEvaluation, k + 1);
    }

    DenseVector s = x_trial - x;
    DenseVector y = g_new - g;
    const double ys = dot(y, s);
    if (ys > 1e-10 * y.norm2() * s.norm2()) {
      if (first_update) {
        const double scale = ys / dot(y, y);
        for (std::size_t i = 0; i < n; ++i) H(i, i) = scale;
        first_update = false;
      }
      const double rho_bfgs = 1.0 / ys;
      const DenseVector Hy = H.matvec(y);
      const double yHy = dot(y, Hy);
      const double c2 = rho_bfgs * rho_bfgs * yHy + rho_bfgs;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          H(i, j) += -rho_bfgs * (s[i] * Hy[j] + Hy[i] * s[j]) + c2 * s[i] * s[j];
    }

    x = x_trial;
    f = f_trial;
    g = std::move(g_new);
    if (cfg.record_trace)
      report.trace.push_back(TraceRecord{k, f, g.norm_inf(), alpha,
                                         std::numeric_limits<double>::quiet_NaN(), true,
                                         PrecondMode::LBFGS});
    ++k;
  }
}

}  // namespace eptctr

#endif  // EPTCTR_BASELINES_HPP

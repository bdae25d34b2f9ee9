#ifndef EPTCTR_SOLVER_HPP
#define EPTCTR_SOLVER_HPP

#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eptctr/errors.hpp"
#include "eptctr/matrix.hpp"
#include "eptctr/preconditioner.hpp"
#include "eptctr/problem.hpp"
#include "eptctr/vector.hpp"

namespace eptctr {

/// Tunable constants of the continuation solver. The defaults are the
/// working set: eta_a = 1e-6, eta1 = 0.25, eta2 = 0.75, gamma1 = 2,
/// gamma2 = 0.5, theta = 1e-6, dt0 = 1e-2, grad_tol = 1e-6 on the gradient
/// infinity norm. max_iter == 0 selects 10 n + 1000.
struct SolverConfig {
  double eta_a = 1e-6;
  double eta1 = 0.25;
  double eta2 = 0.75;
  double gamma1 = 2.0;
  double gamma2 = 0.5;
  double theta = 1e-6;
  double dt0 = 1e-2;
  double grad_tol = 1e-6;
  long max_iter = 0;
  double fd_eps = 1e-6;
  bool record_trace = false;

  void validate() const {
    if (!(0.0 < eta_a && eta_a < eta1 && eta1 < eta2 && eta2 < 1.0))
      throw DomainError("SolverConfig: need 0 < eta_a < eta1 < eta2 < 1");
    if (!(gamma2 < 1.0 && 1.0 < gamma1))
      throw DomainError("SolverConfig: need gamma2 < 1 < gamma1");
    if (!(dt0 > 0.0)) throw DomainError("SolverConfig: dt0 must be positive");
    if (!(grad_tol > 0.0)) throw DomainError("SolverConfig: grad_tol must be positive");
    if (!(fd_eps > 0.0)) throw DomainError("SolverConfig: fd_eps must be positive");
    if (max_iter < 0) throw DomainError("SolverConfig: max_iter must be nonnegative");
  }

  long resolved_max_iter(std::size_t n) const {
    return max_iter > 0 ? max_iter : long(10 * n + 1000);
  }
};

enum class SolveStatus {
  Converged,
  MaxIterations,
  LinearAlgebraFailure,
  NonFiniteEvaluation,
  TimeLimit,
  StepFailure,
};

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIterations: return "MaxIterations";
    case SolveStatus::LinearAlgebraFailure: return "LinearAlgebraFailure";
    case SolveStatus::NonFiniteEvaluation: return "NonFiniteEvaluation";
    case SolveStatus::TimeLimit: return "Timeout";
    case SolveStatus::StepFailure: return "StepFailure";
  }
  return "Unknown";
}

struct TraceRecord {
  long k = 0;
  double f = 0.0;       // objective after the iteration resolved
  double g_inf = 0.0;   // gradient infinity norm after the iteration
  double dt = 0.0;      // time-step used for the trial
  double rho = 0.0;     // NaN when the model reduction degenerated
  bool accepted = false;
  PrecondMode mode = PrecondMode::HESSIAN;
};

struct SolveReport {
  SolveStatus status = SolveStatus::MaxIterations;
  DenseVector x_final;
  double f_final = 0.0;
  double g_inf_norm = 0.0;
  long iterations = 0;
  long long f_evals = 0;
  long long g_evals = 0;
  long long hessian_evals = 0;
  long rejected_steps = 0;
  long regularized_solves = 0;  // SPD solves that needed a diagonal shift
  double wall_time_s = 0.0;
  std::vector<TraceRecord> trace;
};

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

/// s = (dt / (1 + dt)) * s_newton, computed as s_newton / (1 + 1/dt) so the
/// factor stays finite for arbitrarily large dt.
inline DenseVector continuation_step(const DenseVector& s_newton, double dt) {
  const double factor = 1.0 / (1.0 + 1.0 / dt);
  DenseVector s = s_newton;
  s *= factor;
  return s;
}

/// Predicted reduction m(0) - m(s) = -((1 + dt/2) / (1 + dt)) g's of the
/// simplified quadratic model. Positive for any descent step s.
inline double model_reduction(const DenseVector& g, const DenseVector& s, double dt) {
  const double coeff = 0.5 + 0.5 / (1.0 + dt);
  return -coeff * dot(g, s);
}

/// rho = (f_old - f_new) / reduction.
inline double acceptance_ratio(double f_old, double f_new, double reduction) {
  if (reduction == 0.0)
    throw DegenerateModel("acceptance_ratio: zero model reduction");
  return (f_old - f_new) / reduction;
}

/// Time-step adjustment: grow by gamma1 when |1 - rho| <= eta1, keep when
/// eta1 < |1 - rho| < eta2, shrink by gamma2 otherwise (NaN shrinks).
inline double update_dt(double dt, double rho, const SolverConfig& cfg) {
  const double dev = std::abs(1.0 - rho);
  if (dev <= cfg.eta1) return cfg.gamma1 * dt;
  if (dev < cfg.eta2) return dt;
  return cfg.gamma2 * dt;
}

/// Full per-iterate state of the continuation solver.
struct IterateState {
  DenseVector x;
  double f_val = 0.0;
  DenseVector g;
  DenseVector s_newton;  // empty until the first direction is prepared
  double dt = 0.0;
  PreconditionerState precond;
  bool trial_success = true;           // flag_success_trialstep
  PrecondMode direction_mode = PrecondMode::HESSIAN;
  bool direction_fresh = false;        // s_newton already valid for this g
  long regularized_solves = 0;

  double g_inf() const { return g.norm_inf(); }
};

struct StepResult {
  double rho = 0.0;  // NaN when the trial or the model degenerated
  double reduction = 0.0;
  double dt_used = 0.0;
  bool accepted = false;
  bool rho_bad = false;
  PrecondMode mode_used = PrecondMode::HESSIAN;
};

namespace detail {

inline DenseVector solve_newton_direction(IterateState& state) {
  const SpdFactorization fac = SpdFactorization::compute(*state.precond.hessian_cache);
  if (fac.regularized()) state.regularized_solves += 1;
  return fac.solve(-state.g);
}

}  // namespace detail

/// Evaluates f, g at x0 and, unless x0 already satisfies the gradient
/// tolerance, the initial Hessian and Newton-like direction. Throws
/// NonFiniteEvaluation when f or g is not finite at x0.
inline IterateState eptctr_init(const Problem& problem, const DenseVector& x0,
                                const SolverConfig& cfg, EvalCounters& counters) {
  cfg.validate();
  if (x0.size() != problem.dim)
    throw DomainError("eptctr_init: x0 dimension does not match the problem");
  IterateState state;
  state.x = x0;
  state.f_val = problem.eval_f(x0);
  counters.f_evals += 1;
  state.g = problem.eval_g(x0);
  counters.g_evals += 1;
  if (!std::isfinite(state.f_val) || !state.g.all_finite())
    throw NonFiniteEvaluation("eptctr: objective or gradient not finite at x0");
  state.dt = cfg.dt0;
  state.precond = PreconditionerState::initial(x0.size(), cfg.theta);
  if (state.g_inf() > cfg.grad_tol) {
    state.precond.hessian_cache = evaluate_hessian(problem, x0, cfg.fd_eps);
    state.precond.hessian_point = x0;
    counters.hessian_evals += 1;
    state.s_newton = detail::solve_newton_direction(state);
    state.direction_fresh = true;
  }
  return state;
}

/// One iteration of the continuation loop: recompute the direction when the
/// previous trial succeeded, take the damped step, accept or reject on the
/// trust-region ratio, then update k_bad, the preconditioner branch and dt.
/// A rejected trial leaves x, f, g, s_newton and the curvature pair intact
/// and shrinks dt by gamma2. A non-finite trial objective counts as a
/// rejection; a non-finite gradient at an accepted point throws.
inline StepResult eptctr_step(IterateState& state, const Problem& problem,
                              const SolverConfig& cfg, EvalCounters& counters) {
  if (state.trial_success && !state.direction_fresh) {
    if (state.precond.mode == PrecondMode::LBFGS) {
      state.s_newton = -apply_lbfgs_inverse(state.precond.pair, state.g);
    } else {
      state.s_newton = detail::solve_newton_direction(state);
    }
    state.direction_mode = state.precond.mode;
  }
  state.direction_fresh = false;

  StepResult res;
  res.dt_used = state.dt;
  res.mode_used = state.direction_mode;

  const DenseVector s = continuation_step(state.s_newton, state.dt);
  const DenseVector x_trial = state.x + s;
  const double f_trial = problem.eval_f(x_trial);
  counters.f_evals += 1;
  res.reduction = model_reduction(state.g, s, state.dt);

  if (std::isfinite(f_trial) && res.reduction > 0.0) {
    res.rho = acceptance_ratio(state.f_val, f_trial, res.reduction);
    res.accepted = res.rho > cfg.eta_a;
  } else {
    res.rho = std::numeric_limits<double>::quiet_NaN();
    res.accepted = false;
  }

  CurvaturePair new_pair;
  if (res.accepted) {
    DenseVector g_new = problem.eval_g(x_trial);
    counters.g_evals += 1;
    new_pair.s_prev = x_trial - state.x;
    new_pair.y_prev = g_new - state.g;
    state.x = x_trial;
    state.f_val = f_trial;
    state.g = std::move(g_new);
    state.trial_success = true;
    if (!state.g.all_finite())
      throw NonFiniteEvaluation("eptctr: gradient not finite at accepted iterate");
  } else {
    new_pair = state.precond.pair;
    state.trial_success = false;
  }

  res.rho_bad = !(std::abs(1.0 - res.rho) < cfg.eta2);
  state.precond = update_and_select(std::move(state.precond), std::move(new_pair),
                                    res.rho_bad, problem, state.x, cfg.fd_eps, &counters);
  state.dt = update_dt(state.dt, res.rho, cfg);
  return res;
}

/// Runs the continuation method from x0 until the gradient infinity norm
/// drops to cfg.grad_tol, the iteration cap is hit, or the deadline passes.
inline SolveReport eptctr_solve(const Problem& problem, const DenseVector& x0,
                                const SolverConfig& cfg, Deadline deadline = {}) {
  const auto t0 = Clock::now();
  EvalCounters counters;
  SolveReport report;
  auto finish = [&](SolveStatus status, const IterateState& state, long k) {
    report.status = status;
    report.x_final = state.x;
    report.f_final = state.f_val;
    report.g_inf_norm = state.g_inf();
    report.iterations = k;
    report.f_evals = counters.f_evals;
    report.g_evals = counters.g_evals;
    report.hessian_evals = counters.hessian_evals;
    report.regularized_solves = state.regularized_solves;
    report.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
  };

  IterateState state;
  try {
    state = eptctr_init(problem, x0, cfg, counters);
  } catch (const NonFiniteEvaluation&) {
    state.x = x0;
    state.g = DenseVector(x0.size(), std::numeric_limits<double>::quiet_NaN());
    return finish(SolveStatus::NonFiniteEvaluation, state, 0);
  } catch (const SingularSystem&) {
    state.x = x0;
    state.g = DenseVector(x0.size(), std::numeric_limits<double>::quiet_NaN());
    return finish(SolveStatus::LinearAlgebraFailure, state, 0);
  }

  const long max_iter = cfg.resolved_max_iter(problem.dim);
  long k = 0;
  for (;;) {
    if (state.g_inf() <= cfg.grad_tol) return finish(SolveStatus::Converged, state, k);
    if (k >= max_iter) return finish(SolveStatus::MaxIterations, state, k);
    if (deadline && Clock::now() >= *deadline)
      return finish(SolveStatus::TimeLimit, state, k);
    StepResult res;
    try {
      res = eptctr_step(state, problem, cfg, counters);
    } catch (const SingularSystem&) {
      return finish(SolveStatus::LinearAlgebraFailure, state, k);
    } catch (const NonFiniteEvaluation&) {
      return finish(SolveStatus::NonFiniteEvaluation, state, k);
    }
    if (!res.accepted) report.rejected_steps += 1;
    if (cfg.record_trace)
      report.trace.push_back(TraceRecord{k, state.f_val, state.g_inf(), res.dt_used,
                                         res.rho, res.accepted, res.mode_used});
    ++k;
  }
}

/// Convenience overload starting from the problem's default point.
inline SolveReport eptctr_solve(const Problem& problem, const SolverConfig& cfg = {},
                                Deadline deadline = {}) {
  return eptctr_solve(problem, problem.default_x0, cfg, deadline);
}

}  // namespace eptctr

#endif  // EPTCTR_SOLVER_HPP

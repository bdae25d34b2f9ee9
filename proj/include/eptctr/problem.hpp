#ifndef EPTCTR_PROBLEM_HPP
#define EPTCTR_PROBLEM_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "eptctr/matrix.hpp"
#include "eptctr/vector.hpp"

namespace eptctr {

/// An unconstrained objective with analytic gradient, an optional analytic
/// Hessian, and a default start point (2 * ones unless stated otherwise).
/// Evaluations are pure and reentrant.
struct Problem {
  std::string name;
  std::size_t dim = 0;
  std::function<double(const DenseVector&)> eval_f;
  std::function<DenseVector(const DenseVector&)> eval_g;
  std::function<DenseSymMatrix(const DenseVector&)> eval_h;  // may be empty
  DenseVector default_x0;
  std::optional<double> known_f_min;
  std::optional<DenseVector> known_minimizer;

  bool has_hessian() const { return static_cast<bool>(eval_h); }
};

/// Direct evaluation counters, tallied by the solvers. Hessian evaluations
/// are counted once each; a forward-difference Hessian internally spends
/// n + 1 gradient calls that are not added to g_evals.
struct EvalCounters {
  long long f_evals = 0;
  long long g_evals = 0;
  long long hessian_evals = 0;
};

/// Forward-difference Hessian of a problem's gradient (eps defaults to 1e-6).
inline DenseSymMatrix fd_hessian(const Problem& problem, const DenseVector& x,
                                 double eps = 1e-6) {
  return fd_hessian_from_gradient(problem.eval_g, x, eps);
}

/// Hessian used by the solvers: analytic when the problem provides one,
/// the forward-difference approximation otherwise.
inline DenseSymMatrix evaluate_hessian(const Problem& problem, const DenseVector& x,
                                       double fd_eps) {
  if (problem.has_hessian()) return problem.eval_h(x);
  return fd_hessian(problem, x, fd_eps);
}

/// Compares the analytic gradient against central differences of eval_f at
/// `trials` random points in [-5, 5]^n and returns the worst per-entry
/// discrepancy |g_fd - g| / max(1, |g|).
inline double gradient_selfcheck(const Problem& p, int trials, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  const std::size_t n = p.dim;
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    DenseVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = coord(rng);
    const DenseVector g = p.eval_g(x);
    DenseVector xp = x;
    for (std::size_t i = 0; i < n; ++i) {
      const double h = 1e-5 * (1.0 + std::abs(x[i]));
      xp[i] = x[i] + h;
      const double fp = p.eval_f(xp);
      xp[i] = x[i] - h;
      const double fm = p.eval_f(xp);
      xp[i] = x[i];
      const double gfd = (fp - fm) / (2.0 * h);
      const double err = std::abs(gfd - g[i]) / std::max(1.0, std::abs(g[i]));
      worst = std::max(worst, err);
    }
  }
  return worst;
}

}  // namespace eptctr

#endif  // EPTCTR_PROBLEM_HPP

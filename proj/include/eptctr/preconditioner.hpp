#ifndef EPTCTR_PRECONDITIONER_HPP
#define EPTCTR_PRECONDITIONER_HPP

#include <cmath>
#include <optional>
#include <utility>

#include "eptctr/errors.hpp"
#include "eptctr/matrix.hpp"
#include "eptctr/problem.hpp"
#include "eptctr/vector.hpp"

namespace eptctr {

/// Most recent accepted displacement and gradient change. Both vectors are
/// zero only before the first accepted step; a rejected step freezes the
/// whole pair.
struct CurvaturePair {
  DenseVector s_prev;
  DenseVector y_prev;

  static CurvaturePair zero(std::size_t n) {
    return CurvaturePair{DenseVector::zeros(n), DenseVector::zeros(n)};
  }
};

/// |s'y| > theta * ||s||^2, the curvature test guarding the rank-two update.
inline bool curvature_test(const CurvaturePair& pair, double theta) {
  const double sy = dot(pair.s_prev, pair.y_prev);
  const double ss = dot(pair.s_prev, pair.s_prev);
  return std::abs(sy) > theta * ss;
}

/// Applies the rank-two quasi-Newton inverse
///
///   H = I - (y s' + s y') / (y's) + 2 (y'y) / (y's)^2 * s s'
///
/// to a vector without forming the matrix: two inner products against g and
/// two scaled vector additions per call. H is symmetric positive definite
/// with every eigenvalue above 1/2 whenever the curvature test holds.
inline DenseVector apply_lbfgs_inverse(const CurvaturePair& pair, const DenseVector& g) {
  const DenseVector& s = pair.s_prev;
  const DenseVector& y = pair.y_prev;
  const double ys = dot(y, s);
  if (ys == 0.0)
    throw DegenerateCurvature("apply_lbfgs_inverse: y's == 0; switching test must reject this pair");
  const double yy = dot(y, y);
  const double sg = dot(s, g);
  const double yg = dot(y, g);
  DenseVector out = g;
  out.axpy(-sg / ys, y);
  out.axpy(2.0 * yy * sg / (ys * ys) - yg / ys, s);
  return out;
}

/// Residual of the scaling quasi-Newton property, || H y - (y'y / y's) s ||.
/// Zero up to rounding for every valid pair.
inline double scaling_secant_check(const CurvaturePair& pair) {
  const double ys = dot(pair.y_prev, pair.s_prev);
  if (ys == 0.0) throw DegenerateCurvature("scaling_secant_check: y's == 0");
  const double yy = dot(pair.y_prev, pair.y_prev);
  DenseVector r = apply_lbfgs_inverse(pair, pair.y_prev);
  r.axpy(-yy / ys, pair.s_prev);
  return r.norm2();
}

/// Trace-minus-log-determinant measurement of the parametrized update
/// B(lam, sigma) = lam (I - s s'/s's) + sigma y y'/(y's):
///
///   phi = (n-1)(lam - ln lam) + sigma ||y||^2/(y's) - ln sigma - ln(y's) + ln ||s||^2
///
/// Minimized at lam = 1, sigma = y's / ||y||^2, which yields the update
/// applied by apply_lbfgs_inverse. Exposed for the test suite.
inline double measurement_phi(double lam, double sigma, const CurvaturePair& pair,
                              std::size_t n) {
  const double ys = dot(pair.y_prev, pair.s_prev);
  if (!(lam > 0.0) || !(sigma > 0.0) || !(ys > 0.0))
    throw DomainError("measurement_phi: lam, sigma and y's must be positive");
  const double yy = dot(pair.y_prev, pair.y_prev);
  const double ss = dot(pair.s_prev, pair.s_prev);
  return double(n - 1) * (lam - std::log(lam)) + sigma * yy / ys - std::log(sigma) -
         std::log(ys) + std::log(ss);
}

enum class PrecondMode { LBFGS, HESSIAN };

inline const char* to_string(PrecondMode m) {
  return m == PrecondMode::LBFGS ? "LBFGS" : "HESSIAN";
}

/// State of the switching preconditioner. k_bad counts iterations whose
/// ratio satisfied |1 - rho| >= eta2 and never decreases; once it reaches 5,
/// or the curvature test fails, the Hessian branch is selected and
/// hessian_cache holds the (regularizable) matrix at hessian_point.
struct PreconditionerState {
  CurvaturePair pair;
  int k_bad = 0;
  double theta = 1e-6;
  PrecondMode mode = PrecondMode::HESSIAN;
  std::optional<DenseSymMatrix> hessian_cache;
  std::optional<DenseVector> hessian_point;

  static PreconditionerState initial(std::size_t n, double theta) {
    PreconditionerState st;
    st.pair = CurvaturePair::zero(n);
    st.theta = theta;
    return st;
  }
};

/// End-of-iteration update: bumps k_bad when the ratio was bad, then picks
/// the branch for the next direction. The Hessian branch refreshes the
/// cached matrix at x_next (analytic when available, forward differences
/// otherwise); a refresh at an unchanged point reuses the cache.
inline PreconditionerState update_and_select(PreconditionerState state,
                                             CurvaturePair new_pair, bool rho_bad,
                                             const Problem& problem,
                                             const DenseVector& x_next, double fd_eps,
                                             EvalCounters* counters = nullptr) {
  if (rho_bad) state.k_bad += 1;
  state.pair = std::move(new_pair);
  if (state.k_bad >= 5 || !curvature_test(state.pair, state.theta)) {
    state.mode = PrecondMode::HESSIAN;
    if (!state.hessian_point || !(*state.hessian_point == x_next)) {
      state.hessian_cache = evaluate_hessian(problem, x_next, fd_eps);
      state.hessian_point = x_next;
      if (counters) counters->hessian_evals += 1;
    }
  } else {
    state.mode = PrecondMode::LBFGS;
  }
  return state;
}

}  // namespace eptctr

#endif  // EPTCTR_PRECONDITIONER_HPP

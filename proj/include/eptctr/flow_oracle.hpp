#ifndef EPTCTR_FLOW_ORACLE_HPP
#define EPTCTR_FLOW_ORACLE_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "eptctr/errors.hpp"
#include "eptctr/matrix.hpp"
#include "eptctr/problem.hpp"
#include "eptctr/solver.hpp"
#include "eptctr/vector.hpp"

namespace eptctr {

/// Reference trajectory of the preconditioned gradient flow, used by the
/// test suite only. residual_norms holds ||g(x(t))||_2 at each node.
struct FlowTrajectory {
  std::vector<double> times;
  std::vector<DenseVector> states;
  std::vector<double> residual_norms;
};

/// Explicit Euler on dx/dt = -B(x)^{-1} g(x), taking round(t_end / h)
/// uniform steps of size h. t_end == 0 records only the initial point.
inline FlowTrajectory integrate_newton_flow(const Problem& problem, const DenseVector& x0,
                                            double t_end, double h) {
  if (!(h > 0.0)) throw DomainError("integrate_newton_flow: h must be positive");
  if (t_end < 0.0) throw DomainError("integrate_newton_flow: t_end must be nonnegative");
  FlowTrajectory traj;
  DenseVector x = x0;
  const long steps = std::llround(t_end / h);
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.residual_norms.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(x);
  traj.residual_norms.push_back(problem.eval_g(x).norm2());
  for (long i = 1; i <= steps; ++i) {
    const DenseVector g = problem.eval_g(x);
    const DenseSymMatrix B = evaluate_hessian(problem, x, 1e-6);
    x.axpy(-h, solve_spd(B, g));
    traj.times.push_back(double(i) * h);
    traj.states.push_back(x);
    traj.residual_norms.push_back(problem.eval_g(x).norm2());
  }
  return traj;
}

/// Compares the linearized explicit continuation step against the exact
/// implicit Euler step z = x - dt B(z)^{-1} g(z), the latter solved by an
/// inner fixed-point iteration. Returns ||s_cont - s_impl|| normalized by
/// the Newton direction norm, a quantity of order dt^2 for smooth problems
/// and zero (up to rounding) on quadratics.
inline double one_step_consistency(const Problem& problem, const DenseVector& x, double dt) {
  if (!(dt > 0.0)) throw DomainError("one_step_consistency: dt must be positive");
  const DenseVector g = problem.eval_g(x);
  const DenseSymMatrix B = evaluate_hessian(problem, x, 1e-6);
  const DenseVector s_newton = solve_spd(B, -g);
  const DenseVector s_cont = continuation_step(s_newton, dt);

  DenseVector z = x + s_cont;
  const double tol = 1e-13 * (1.0 + x.norm_inf());
  bool converged = false;
  for (int it = 0; it < 50; ++it) {
    const DenseVector gz = problem.eval_g(z);
    const DenseSymMatrix Bz = evaluate_hessian(problem, z, 1e-6);
    DenseVector z_next = x;
    z_next.axpy(-dt, solve_spd(Bz, gz));
    const double delta = (z_next - z).norm_inf();
    z = std::move(z_next);
    if (delta <= tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw OracleFailure("one_step_consistency: implicit Euler fixed point did not converge");

  const DenseVector s_impl = z - x;
  const double scale = std::max(s_newton.norm2(), 1e-300);
  return (s_cont - s_impl).norm2() / scale;
}

}  // namespace eptctr

#endif  // EPTCTR_FLOW_ORACLE_HPP

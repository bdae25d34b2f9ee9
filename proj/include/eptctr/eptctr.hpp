#ifndef EPTCTR_EPTCTR_HPP
#define EPTCTR_EPTCTR_HPP

// Explicit pseudo-transient continuation for unconstrained minimization:
// a generalized gradient-flow solver with trust-region time-step updating
// and a switching L-BFGS / Hessian-inverse preconditioner, plus baseline
// solvers, a test-function catalog and a benchmark harness.

#include "eptctr/baselines.hpp"
#include "eptctr/bench.hpp"
#include "eptctr/errors.hpp"
#include "eptctr/flow_oracle.hpp"
#include "eptctr/matrix.hpp"
#include "eptctr/preconditioner.hpp"
#include "eptctr/problem.hpp"
#include "eptctr/problems.hpp"
#include "eptctr/solver.hpp"
#include "eptctr/vector.hpp"

#endif  // EPTCTR_EPTCTR_HPP

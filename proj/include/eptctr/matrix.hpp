#ifndef EPTCTR_MATRIX_HPP
#define EPTCTR_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "eptctr/errors.hpp"
#include "eptctr/vector.hpp"

namespace eptctr {

/// Dense symmetric n-by-n matrix, stored fully in row-major order.
/// Construction through symmetrize() guarantees exact symmetry; the
/// element accessors do not re-enforce it.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(std::size_t n, double value = 0.0) : n_(n), a_(n * n, value) {}

  static DenseSymMatrix identity(std::size_t n) {
    DenseSymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static DenseSymMatrix diagonal(const DenseVector& d) {
    DenseSymMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  /// Builds (A + A^T) / 2 from a row-major square array.
  static DenseSymMatrix symmetrize(const std::vector<double>& raw, std::size_t n) {
    DenseSymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const double v = 0.5 * (raw[i * n + j] + raw[j * n + i]);
        m(i, j) = v;
        m(j, i) = v;
      }
    }
    return m;
  }

  std::size_t dim() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<double>& raw() const noexcept { return a_; }

  DenseVector matvec(const DenseVector& x) const {
    DenseVector y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      const double* row = a_.data() + i * n_;
      double acc = 0.0;
      for (std::size_t j = 0; j < n_; ++j) acc += row[j] * x[j];
      y[i] = acc;
    }
    return y;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

  double max_diagonal() const {
    double m = n_ > 0 ? (*this)(0, 0) : 0.0;
    for (std::size_t i = 1; i < n_; ++i) m = std::max(m, (*this)(i, i));
    return m;
  }

  double frobenius_norm() const {
    double acc = 0.0;
    for (double v : a_) acc += v * v;
    return std::sqrt(acc);
  }

  /// max |a_ij - a_ji|, useful in tests.
  double max_asymmetry() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
  }

  DenseSymMatrix& add_diagonal(double tau) {
    for (std::size_t i = 0; i < n_; ++i) (*this)(i, i) += tau;
    return *this;
  }

  bool all_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); });
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// Cholesky factorization of B, falling back to B + tau*I with a doubling
/// shift when B is not numerically positive definite. The shift starts at
/// 1e-8 * (1 + max(diag, 0)) and the retry gives up past tau = 1e8.
class SpdFactorization {
 public:
  static SpdFactorization compute(const DenseSymMatrix& B) {
    SpdFactorization f;
    f.n_ = B.dim();
    f.l_.assign(f.n_ * f.n_, 0.0);
    if (f.try_factor(B, 0.0)) return f;
    double tau = 1e-8 * (1.0 + std::max(B.max_diagonal(), 0.0));
    if (!(tau > 0.0)) tau = 1e-8;
    while (tau <= 1e8) {
      if (f.try_factor(B, tau)) return f;
      tau *= 2.0;
    }
    throw SingularSystem("solve_spd: shift retry exceeded tau = 1e8");
  }

  std::size_t dim() const noexcept { return n_; }
  double shift() const noexcept { return shift_; }
  bool regularized() const noexcept { return shift_ > 0.0; }

  /// Solves (B + shift*I) x = rhs via the stored factor.
  DenseVector solve(const DenseVector& rhs) const {
    DenseVector x = rhs;
    // forward: L z = rhs
    for (std::size_t i = 0; i < n_; ++i) {
      const double* row = l_.data() + i * n_;
      double acc = x[i];
      for (std::size_t k = 0; k < i; ++k) acc -= row[k] * x[k];
      x[i] = acc / row[i];
    }
    // backward: L^T x = z
    for (std::size_t ii = n_; ii-- > 0;) {
      double acc = x[ii];
      for (std::size_t k = ii + 1; k < n_; ++k) acc -= l_[k * n_ + ii] * x[k];
      x[ii] = acc / l_[ii * n_ + ii];
    }
    return x;
  }

 private:
  bool try_factor(const DenseSymMatrix& B, double tau) {
    shift_ = tau;
    for (std::size_t i = 0; i < n_; ++i) {
      double* li = l_.data() + i * n_;
      for (std::size_t j = 0; j <= i; ++j) {
        const double* lj = l_.data() + j * n_;
        double acc = B(i, j) + (i == j ? tau : 0.0);
        for (std::size_t k = 0; k < j; ++k) acc -= li[k] * lj[k];
        if (i == j) {
          if (!(acc > 0.0) || !std::isfinite(acc)) return false;
          li[j] = std::sqrt(acc);
        } else {
          li[j] = acc / lj[j];
        }
      }
      std::fill(li + i + 1, li + n_, 0.0);
    }
    return true;
  }

  std::size_t n_ = 0;
  double shift_ = 0.0;
  std::vector<double> l_;
};

/// Solves B x = rhs for symmetric positive definite B, with the diagonal
/// shift fallback described on SpdFactorization. One step of iterative
/// refinement keeps the residual near machine precision on healthy systems.
inline DenseVector solve_spd(const DenseSymMatrix& B, const DenseVector& rhs) {
  const SpdFactorization f = SpdFactorization::compute(B);
  DenseVector x = f.solve(rhs);
  DenseVector r = rhs - B.matvec(x);
  if (f.shift() != 0.0) r.axpy(-f.shift(), x);
  x += f.solve(r);
  return x;
}

struct SymEigenSystem {
  std::vector<double> values;          // ascending
  std::vector<DenseVector> vectors;    // vectors[k] pairs with values[k]
};

/// Cyclic Jacobi eigenvalue iteration for symmetric matrices.
inline SymEigenSystem sym_eigen(const DenseSymMatrix& B) {
  const std::size_t n = B.dim();
  DenseSymMatrix a = B;
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  bool converged = false;
  for (int sweep = 0; sweep < 128 && !converged; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) <= 1e-14 * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = a(p, i) = c * aip - s * aiq;
          a(i, q) = a(q, i) = s * aip + c * aiq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v[i * n + p];
          const double viq = v[i * n + q];
          v[i * n + p] = c * vip - s * viq;
          v[i * n + q] = s * vip + c * viq;
        }
      }
    }
  }
  if (!converged) throw EigenFailure("sym_eigen: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  SymEigenSystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t k : order) {
    out.values.push_back(a(k, k));
    DenseVector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

/// Eigenvalues of a symmetric matrix, ascending.
inline std::vector<double> sym_eigenvalues(const DenseSymMatrix& B) {
  return sym_eigen(B).values;
}

/// Forward-difference Hessian column i = (g(x + eps e_i) - g(x)) / eps,
/// symmetrized as (A + A^T)/2. Consumes exactly n + 1 gradient evaluations.
template <class GradFn>
DenseSymMatrix fd_hessian_from_gradient(GradFn&& grad, const DenseVector& x, double eps) {
  if (!(eps > 0.0)) throw DomainError("fd_hessian: eps must be positive");
  const std::size_t n = x.size();
  const DenseVector g0 = grad(x);
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(g0[j]))
      throw NonFiniteEvaluation("fd_hessian: non-finite gradient entry " + std::to_string(j) +
                                    " at the base point",
                                j);
  }
  std::vector<double> raw(n * n, 0.0);
  DenseVector xp = x;
  for (std::size_t i = 0; i < n; ++i) {
    xp[i] = x[i] + eps;
    const DenseVector gi = grad(xp);
    xp[i] = x[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(gi[j]))
        throw NonFiniteEvaluation("fd_hessian: non-finite gradient entry " + std::to_string(j) +
                                      " probing coordinate " + std::to_string(i),
                                  i);
      raw[j * n + i] = (gi[j] - g0[j]) / eps;
    }
  }
  return DenseSymMatrix::symmetrize(raw, n);
}

}  // namespace eptctr

#endif  // EPTCTR_MATRIX_HPP

#ifndef EPTCTR_VECTOR_HPP
#define EPTCTR_VECTOR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "eptctr/errors.hpp"

namespace eptctr {

/// Dense real vector with value semantics. Entries are expected to stay
/// finite; callers that evaluate user functions check for themselves.
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t n, double value = 0.0) : entries_(n, value) {}
  DenseVector(std::initializer_list<double> values) : entries_(values) {}

  static DenseVector constant(std::size_t n, double value) { return DenseVector(n, value); }
  static DenseVector ones(std::size_t n) { return DenseVector(n, 1.0); }
  static DenseVector zeros(std::size_t n) { return DenseVector(n, 0.0); }
  /// i-th canonical basis vector of length n.
  static DenseVector unit(std::size_t n, std::size_t i) {
    DenseVector e(n, 0.0);
    e[i] = 1.0;
    return e;
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  double& operator[](std::size_t i) { return entries_[i]; }
  double operator[](std::size_t i) const { return entries_[i]; }
  double* data() noexcept { return entries_.data(); }
  const double* data() const noexcept { return entries_.data(); }
  auto begin() noexcept { return entries_.begin(); }
  auto end() noexcept { return entries_.end(); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  DenseVector& operator+=(const DenseVector& rhs) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs[i];
    return *this;
  }
  DenseVector& operator-=(const DenseVector& rhs) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs[i];
    return *this;
  }
  DenseVector& operator*=(double a) {
    for (double& v : entries_) v *= a;
    return *this;
  }

  /// this += a * x
  DenseVector& axpy(double a, const DenseVector& x) {
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += a * x[i];
    return *this;
  }

  double dot(const DenseVector& rhs) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) acc += entries_[i] * rhs[i];
    return acc;
  }

  double norm2() const { return std::sqrt(dot(*this)); }

  // NaN entries propagate; std::max would silently drop them.
  double norm_inf() const {
    double m = 0.0;
    for (double v : entries_) {
      if (std::isnan(v)) return v;
      m = std::max(m, std::abs(v));
    }
    return m;
  }

  bool all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](double v) { return std::isfinite(v); });
  }

  bool operator==(const DenseVector& rhs) const { return entries_ == rhs.entries_; }

 private:
  std::vector<double> entries_;
};

inline DenseVector operator+(DenseVector lhs, const DenseVector& rhs) {
  lhs += rhs;
  return lhs;
}
inline DenseVector operator-(DenseVector lhs, const DenseVector& rhs) {
  lhs -= rhs;
  return lhs;
}
inline DenseVector operator*(double a, DenseVector v) {
  v *= a;
  return v;
}
inline DenseVector operator-(DenseVector v) {
  v *= -1.0;
  return v;
}
inline double dot(const DenseVector& a, const DenseVector& b) { return a.dot(b); }

/// Kahan compensated accumulator. The catalog objectives sum thousands of
/// terms; naive accumulation swallows increments smaller than one ulp of the
/// running sum, which floors the achievable objective decrease well above
/// what the optimizer needs near a minimizer.
class KahanSum {
 public:
  void add(double v) {
    const double y = v - c_;
    const double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

}  // namespace eptctr

#endif  // EPTCTR_VECTOR_HPP

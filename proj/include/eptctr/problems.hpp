#ifndef EPTCTR_PROBLEMS_HPP
#define EPTCTR_PROBLEMS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "eptctr/errors.hpp"
#include "eptctr/problem.hpp"

namespace eptctr {
namespace problems {

inline constexpr double kPi = std::numbers::pi;

namespace detail {

inline DenseVector start_point(std::size_t n) { return DenseVector::constant(n, 2.0); }

inline void require_dim(const std::string& name, std::size_t n, std::size_t min_n,
                        std::size_t multiple_of = 1) {
  if (n < min_n || n % multiple_of != 0)
    throw DomainError(name + ": unsupported dimension " + std::to_string(n));
}

}  // namespace detail

/// f = sum x_i^2
inline Problem sphere(std::size_t n = 1000) {
  detail::require_dim("sphere", n, 1);
  Problem p;
  p.name = "sphere";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum f;
    for (double v : x) f.add(v * v);
    return f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    DenseVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = 2.0 * x[i];
    return g;
  };
  p.eval_h = [](const DenseVector& x) {
    return DenseSymMatrix::diagonal(DenseVector::constant(x.size(), 2.0));
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::zeros(n);
  return p;
}

/// f = sum i * x_i^2 (1-based weights)
inline Problem sum_squares(std::size_t n = 1000) {
  detail::require_dim("sum-squares", n, 1);
  Problem p;
  p.name = "sum-squares";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum f;
    for (std::size_t i = 0; i < x.size(); ++i) f.add(double(i + 1) * x[i] * x[i]);
    return f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    DenseVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = 2.0 * double(i + 1) * x[i];
    return g;
  };
  p.eval_h = [](const DenseVector& x) {
    DenseVector d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = 2.0 * double(i + 1);
    return DenseSymMatrix::diagonal(d);
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::zeros(n);
  return p;
}

/// f = sum_{i=1..n} sum_{j<=i} x_j^2 = sum_j (n - j + 1) x_j^2
inline Problem rotated_hyper_ellipsoid(std::size_t n = 1000) {
  detail::require_dim("rotated-hyper-ellipsoid", n, 1);
  Problem p;
  p.name = "rotated-hyper-ellipsoid";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    const std::size_t n = x.size();
    KahanSum f;
    for (std::size_t j = 0; j < n; ++j) f.add(double(n - j) * x[j] * x[j]);
    return f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    const std::size_t n = x.size();
    DenseVector g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = 2.0 * double(n - j) * x[j];
    return g;
  };
  p.eval_h = [](const DenseVector& x) {
    const std::size_t n = x.size();
    DenseVector d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = 2.0 * double(n - j);
    return DenseSymMatrix::diagonal(d);
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::zeros(n);
  return p;
}

/// f = sum (x_i - 1)^2 - sum_{i>=2} x_i x_{i-1}; minimum x_i = i(n+1-i)
inline Problem trid(std::size_t n = 1000) {
  detail::require_dim("trid", n, 2);
  Problem p;
  p.name = "trid";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum f;
    for (std::size_t i = 0; i < x.size(); ++i) f.add((x[i] - 1.0) * (x[i] - 1.0));
    for (std::size_t i = 1; i < x.size(); ++i) f.add(-x[i] * x[i - 1]);
    return f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    const std::size_t n = x.size();
    DenseVector g(n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = 2.0 * (x[i] - 1.0);
      if (i > 0) g[i] -= x[i - 1];
      if (i + 1 < n) g[i] -= x[i + 1];
    }
    return g;
  };
  p.eval_h = [](const DenseVector& x) {
    const std::size_t n = x.size();
    DenseSymMatrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
      h(i, i) = 2.0;
      if (i + 1 < n) h(i, i + 1) = h(i + 1, i) = -1.0;
    }
    return h;
  };
  p.default_x0 = detail::start_point(n);
  return p;
}

/// Extended Rosenbrock over independent coordinate pairs:
/// f = sum_{j=1}^{n/2} [100 (x_{2j} - x_{2j-1}^2)^2 + (1 - x_{2j-1})^2].
/// Its trajectory from c * ones is the two-dimensional one replicated, so
/// iteration counts do not grow with n.
inline Problem rosenbrock(std::size_t n = 1000) {
  detail::require_dim("rosenbrock", n, 2, 2);
  Problem p;
  p.name = "rosenbrock";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum f;
    for (std::size_t j = 0; j + 1 < x.size(); j += 2) {
      const double a = x[j + 1] - x[j] * x[j];
      const double b = 1.0 - x[j];
      f.add(100.0 * a * a + b * b);
    }
    return f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    DenseVector g(x.size(), 0.0);
    for (std::size_t j = 0; j + 1 < x.size(); j += 2) {
      const double a = x[j + 1] - x[j] * x[j];
      g[j] = -400.0 * x[j] * a - 2.0 * (1.0 - x[j]);
      g[j + 1] = 200.0 * a;
    }
    return g;
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::ones(n);
  return p;
}

/// Chained Rosenbrock: f = sum_{i<n} [100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2].
/// Coupling every coordinate to the next makes minimization proceed as a
/// wavefront along the chain, so iteration counts grow with n.
inline Problem rosenbrock_chained(std::size_t n = 1000) {
  detail::require_dim("rosenbrock-chained", n, 2);
  Problem p;
  p.name = "rosenbrock-chained";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum f;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      const double a = x[i + 1] - x[i] * x[i];
      const double b = 1.0 - x[i];
      f.add(100.0 * a * a + b * b);
    }
    return f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    const std::size_t n = x.size();
    DenseVector g(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double a = x[i + 1] - x[i] * x[i];
      g[i] += -400.0 * x[i] * a - 2.0 * (1.0 - x[i]);
      g[i + 1] += 200.0 * a;
    }
    return g;
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::ones(n);
  return p;
}

/// f = (x_1 - 1)^2 + sum_{i=2..n} i (2 x_i^2 - x_{i-1})^2
inline Problem dixon_price(std::size_t n = 1000) {
  detail::require_dim("dixon-price", n, 2);
  Problem p;
  p.name = "dixon-price";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum f;
    f.add((x[0] - 1.0) * (x[0] - 1.0));
    for (std::size_t i = 1; i < x.size(); ++i) {
      const double a = 2.0 * x[i] * x[i] - x[i - 1];
      f.add(double(i + 1) * a * a);
    }
    return f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    const std::size_t n = x.size();
    DenseVector g(n, 0.0);
    g[0] = 2.0 * (x[0] - 1.0);
    for (std::size_t i = 1; i < n; ++i) {
      const double a = 2.0 * x[i] * x[i] - x[i - 1];
      g[i] += 8.0 * double(i + 1) * x[i] * a;
      g[i - 1] += -2.0 * double(i + 1) * a;
    }
    return g;
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  {
    DenseVector xs(n);
    for (std::size_t i = 0; i < n; ++i)
      xs[i] = std::pow(2.0, std::pow(2.0, -double(i)) - 1.0);
    p.known_minimizer = xs;
  }
  return p;
}

/// Levy function with w_i = 1 + (x_i - 1)/4
inline Problem levy(std::size_t n = 1000) {
  detail::require_dim("levy", n, 2);
  Problem p;
  p.name = "levy";
  p.dim = n;
  auto w_of = [](double x) { return 1.0 + (x - 1.0) / 4.0; };
  p.eval_f = [w_of](const DenseVector& x) {
    const std::size_t n = x.size();
    const double w0 = w_of(x[0]);
    KahanSum f;
    f.add(std::sin(kPi * w0) * std::sin(kPi * w0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double w = w_of(x[i]);
      const double s = std::sin(kPi * w + 1.0);
      f.add((w - 1.0) * (w - 1.0) * (1.0 + 10.0 * s * s));
    }
    const double wn = w_of(x[n - 1]);
    const double sn = std::sin(2.0 * kPi * wn);
    f.add((wn - 1.0) * (wn - 1.0) * (1.0 + sn * sn));
    return f.value();
  };
  p.eval_g = [w_of](const DenseVector& x) {
    const std::size_t n = x.size();
    DenseVector g(n, 0.0);
    {
      const double w0 = w_of(x[0]);
      g[0] += 2.0 * std::sin(kPi * w0) * std::cos(kPi * w0) * kPi;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double w = w_of(x[i]);
      const double s = std::sin(kPi * w + 1.0);
      const double c = std::cos(kPi * w + 1.0);
      g[i] += 2.0 * (w - 1.0) * (1.0 + 10.0 * s * s) +
              (w - 1.0) * (w - 1.0) * 20.0 * s * c * kPi;
    }
    {
      const double wn = w_of(x[n - 1]);
      const double s = std::sin(2.0 * kPi * wn);
      const double c = std::cos(2.0 * kPi * wn);
      g[n - 1] += 2.0 * (wn - 1.0) * (1.0 + s * s) +
                  (wn - 1.0) * (wn - 1.0) * 4.0 * kPi * s * c;
    }
    g *= 0.25;  // dw/dx
    return g;
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::ones(n);
  return p;
}

/// Powell singular function over groups of four coordinates.
inline Problem powell(std::size_t n = 1000) {
  detail::require_dim("powell", n, 4, 4);
  Problem p;
  p.name = "powell";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum f;
    for (std::size_t k = 0; k + 3 < x.size(); k += 4) {
      const double a = x[k], b = x[k + 1], c = x[k + 2], d = x[k + 3];
      const double t1 = a + 10.0 * b;
      const double t2 = c - d;
      const double t3 = b - 2.0 * c;
      const double t4 = a - d;
      f.add(t1 * t1 + 5.0 * t2 * t2 + t3 * t3 * t3 * t3 + 10.0 * t4 * t4 * t4 * t4);
    }
    return f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    DenseVector g(x.size(), 0.0);
    for (std::size_t k = 0; k + 3 < x.size(); k += 4) {
      const double a = x[k], b = x[k + 1], c = x[k + 2], d = x[k + 3];
      const double t1 = a + 10.0 * b;
      const double t2 = c - d;
      const double t3 = b - 2.0 * c;
      const double t4 = a - d;
      g[k] = 2.0 * t1 + 40.0 * t4 * t4 * t4;
      g[k + 1] = 20.0 * t1 + 4.0 * t3 * t3 * t3;
      g[k + 2] = 10.0 * t2 - 8.0 * t3 * t3 * t3;
      g[k + 3] = -10.0 * t2 - 40.0 * t4 * t4 * t4;
    }
    return g;
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::zeros(n);
  return p;
}

/// f = 10 n + sum (x_i^2 - 10 cos(2 pi x_i))
inline Problem rastrigin(std::size_t n = 1000) {
  detail::require_dim("rastrigin", n, 1);
  Problem p;
  p.name = "rastrigin";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum f;
    f.add(10.0 * double(x.size()));
    for (double v : x) f.add(v * v - 10.0 * std::cos(2.0 * kPi * v));
    return f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    DenseVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      g[i] = 2.0 * x[i] + 20.0 * kPi * std::sin(2.0 * kPi * x[i]);
    return g;
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::zeros(n);
  return p;
}

/// f = 418.9829 n - sum x_i sin(sqrt|x_i|)
inline Problem schwefel(std::size_t n = 1000) {
  detail::require_dim("schwefel", n, 1);
  Problem p;
  p.name = "schwefel";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum f;
    f.add(418.9829 * double(x.size()));
    for (double v : x) f.add(-v * std::sin(std::sqrt(std::abs(v))));
    return f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    DenseVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = std::sqrt(std::abs(x[i]));
      g[i] = r == 0.0 ? 0.0 : -std::sin(r) - 0.5 * r * std::cos(r);
    }
    return g;
  };
  p.default_x0 = detail::start_point(n);
  return p;
}

/// f = 0.5 sum (x_i^4 - 16 x_i^2 + 5 x_i)
inline Problem styblinski_tang(std::size_t n = 1000) {
  detail::require_dim("styblinski-tang", n, 1);
  Problem p;
  p.name = "styblinski-tang";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum f;
    for (double v : x) f.add(v * v * v * v - 16.0 * v * v + 5.0 * v);
    return 0.5 * f.value();
  };
  p.eval_g = [](const DenseVector& x) {
    DenseVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      g[i] = 2.0 * x[i] * x[i] * x[i] - 16.0 * x[i] + 2.5;
    return g;
  };
  p.default_x0 = detail::start_point(n);
  return p;
}

/// Ackley function with a = 20, b = 0.2, c = 2 pi.
inline Problem ackley(std::size_t n = 1000) {
  detail::require_dim("ackley", n, 1);
  Problem p;
  p.name = "ackley";
  p.dim = n;
  constexpr double a = 20.0, b = 0.2, c = 2.0 * kPi;
  p.eval_f = [](const DenseVector& x) {
    const double n = double(x.size());
    KahanSum s, q;
    for (double v : x) {
      s.add(v * v);
      q.add(std::cos(c * v));
    }
    return -a * std::exp(-b * std::sqrt(s.value() / n)) - std::exp(q.value() / n) + a +
           std::exp(1.0);
  };
  p.eval_g = [](const DenseVector& x) {
    const double n = double(x.size());
    KahanSum s_acc, q_acc;
    for (double v : x) {
      s_acc.add(v * v);
      q_acc.add(std::cos(c * v));
    }
    const double q = q_acc.value();
    const double rms = std::sqrt(s_acc.value() / n);
    const double e1 = std::exp(-b * rms);
    const double e2 = std::exp(q / n);
    DenseVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double radial = rms == 0.0 ? 0.0 : a * b * e1 * x[i] / (n * rms);
      g[i] = radial + e2 * c * std::sin(c * x[i]) / n;
    }
    return g;
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::zeros(n);
  return p;
}

/// f = S/4000 - prod cos(x_i / sqrt(i)) + 1
inline Problem griewank(std::size_t n = 10) {
  detail::require_dim("griewank", n, 1);
  Problem p;
  p.name = "griewank";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum s;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      s.add(x[i] * x[i]);
      prod *= std::cos(x[i] / std::sqrt(double(i + 1)));
    }
    return s.value() / 4000.0 - prod + 1.0;
  };
  p.eval_g = [](const DenseVector& x) {
    const std::size_t n = x.size();
    DenseVector g(n);
    for (std::size_t i = 0; i < n; ++i) {
      double rest = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) rest *= std::cos(x[j] / std::sqrt(double(j + 1)));
      const double r = std::sqrt(double(i + 1));
      g[i] = x[i] / 2000.0 + std::sin(x[i] / r) / r * rest;
    }
    return g;
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::zeros(n);
  return p;
}

/// f = sum x^2 + (sum 0.5 i x_i)^2 + (sum 0.5 i x_i)^4
inline Problem zakharov(std::size_t n = 10) {
  detail::require_dim("zakharov", n, 1);
  Problem p;
  p.name = "zakharov";
  p.dim = n;
  p.eval_f = [](const DenseVector& x) {
    KahanSum s, u_acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
      s.add(x[i] * x[i]);
      u_acc.add(0.5 * double(i + 1) * x[i]);
    }
    const double u = u_acc.value();
    return s.value() + u * u + u * u * u * u;
  };
  p.eval_g = [](const DenseVector& x) {
    KahanSum u_acc;
    for (std::size_t i = 0; i < x.size(); ++i) u_acc.add(0.5 * double(i + 1) * x[i]);
    const double u = u_acc.value();
    const double du = 2.0 * u + 4.0 * u * u * u;
    DenseVector g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      g[i] = 2.0 * x[i] + du * 0.5 * double(i + 1);
    return g;
  };
  p.default_x0 = detail::start_point(n);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::zeros(n);
  return p;
}

inline Problem beale() {
  Problem p;
  p.name = "beale";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double t1 = 1.5 - x * (1.0 - y);
    const double t2 = 2.25 - x * (1.0 - y * y);
    const double t3 = 2.625 - x * (1.0 - y * y * y);
    return t1 * t1 + t2 * t2 + t3 * t3;
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double t1 = 1.5 - x * (1.0 - y);
    const double t2 = 2.25 - x * (1.0 - y * y);
    const double t3 = 2.625 - x * (1.0 - y * y * y);
    DenseVector g(2);
    g[0] = -2.0 * (t1 * (1.0 - y) + t2 * (1.0 - y * y) + t3 * (1.0 - y * y * y));
    g[1] = 2.0 * x * (t1 + 2.0 * y * t2 + 3.0 * y * y * t3);
    return g;
  };
  p.default_x0 = detail::start_point(2);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector{3.0, 0.5};
  return p;
}

inline Problem booth() {
  Problem p;
  p.name = "booth";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double u = v[0] + 2.0 * v[1] - 7.0;
    const double w = 2.0 * v[0] + v[1] - 5.0;
    return u * u + w * w;
  };
  p.eval_g = [](const DenseVector& v) {
    const double u = v[0] + 2.0 * v[1] - 7.0;
    const double w = 2.0 * v[0] + v[1] - 5.0;
    return DenseVector{2.0 * u + 4.0 * w, 4.0 * u + 2.0 * w};
  };
  p.eval_h = [](const DenseVector&) {
    DenseSymMatrix h(2);
    h(0, 0) = 10.0;
    h(0, 1) = h(1, 0) = 8.0;
    h(1, 1) = 10.0;
    return h;
  };
  p.default_x0 = detail::start_point(2);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector{1.0, 3.0};
  return p;
}

inline Problem branin() {
  Problem p;
  p.name = "branin";
  p.dim = 2;
  constexpr double a = 1.0, r = 6.0, s = 10.0;
  const double b = 5.1 / (4.0 * kPi * kPi);
  const double c = 5.0 / kPi;
  const double t = 1.0 / (8.0 * kPi);
  p.eval_f = [=](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double u = y - b * x * x + c * x - r;
    return a * u * u + s * (1.0 - t) * std::cos(x) + s;
  };
  p.eval_g = [=](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double u = y - b * x * x + c * x - r;
    DenseVector g(2);
    g[0] = 2.0 * a * u * (-2.0 * b * x + c) - s * (1.0 - t) * std::sin(x);
    g[1] = 2.0 * a * u;
    return g;
  };
  p.default_x0 = detail::start_point(2);
  return p;
}

inline Problem easom() {
  Problem p;
  p.name = "easom";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double e = std::exp(-((x - kPi) * (x - kPi) + (y - kPi) * (y - kPi)));
    return -std::cos(x) * std::cos(y) * e;
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double e = std::exp(-((x - kPi) * (x - kPi) + (y - kPi) * (y - kPi)));
    const double cc = std::cos(x) * std::cos(y);
    DenseVector g(2);
    g[0] = std::sin(x) * std::cos(y) * e + 2.0 * (x - kPi) * cc * e;
    g[1] = std::cos(x) * std::sin(y) * e + 2.0 * (y - kPi) * cc * e;
    return g;
  };
  p.default_x0 = detail::start_point(2);
  p.known_f_min = -1.0;
  p.known_minimizer = DenseVector{kPi, kPi};
  return p;
}

inline Problem matyas() {
  Problem p;
  p.name = "matyas";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    return 0.26 * (v[0] * v[0] + v[1] * v[1]) - 0.48 * v[0] * v[1];
  };
  p.eval_g = [](const DenseVector& v) {
    return DenseVector{0.52 * v[0] - 0.48 * v[1], 0.52 * v[1] - 0.48 * v[0]};
  };
  p.eval_h = [](const DenseVector&) {
    DenseSymMatrix h(2);
    h(0, 0) = h(1, 1) = 0.52;
    h(0, 1) = h(1, 0) = -0.48;
    return h;
  };
  p.default_x0 = detail::start_point(2);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector{0.0, 0.0};
  return p;
}

inline Problem mccormick() {
  Problem p;
  p.name = "mccormick";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    return std::sin(x + y) + (x - y) * (x - y) - 1.5 * x + 2.5 * y + 1.0;
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double c = std::cos(x + y);
    return DenseVector{c + 2.0 * (x - y) - 1.5, c - 2.0 * (x - y) + 2.5};
  };
  p.default_x0 = detail::start_point(2);
  return p;
}

/// Bohachevsky function no. 1.
inline Problem bohachevsky() {
  Problem p;
  p.name = "bohachevsky";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    return x * x + 2.0 * y * y - 0.3 * std::cos(3.0 * kPi * x) -
           0.4 * std::cos(4.0 * kPi * y) + 0.7;
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    return DenseVector{2.0 * x + 0.9 * kPi * std::sin(3.0 * kPi * x),
                       4.0 * y + 1.6 * kPi * std::sin(4.0 * kPi * y)};
  };
  p.default_x0 = detail::start_point(2);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector{0.0, 0.0};
  return p;
}

inline Problem colville() {
  Problem p;
  p.name = "colville";
  p.dim = 4;
  p.eval_f = [](const DenseVector& v) {
    const double x1 = v[0], x2 = v[1], x3 = v[2], x4 = v[3];
    return 100.0 * (x1 * x1 - x2) * (x1 * x1 - x2) + (x1 - 1.0) * (x1 - 1.0) +
           (x3 - 1.0) * (x3 - 1.0) + 90.0 * (x3 * x3 - x4) * (x3 * x3 - x4) +
           10.1 * ((x2 - 1.0) * (x2 - 1.0) + (x4 - 1.0) * (x4 - 1.0)) +
           19.8 * (x2 - 1.0) * (x4 - 1.0);
  };
  p.eval_g = [](const DenseVector& v) {
    const double x1 = v[0], x2 = v[1], x3 = v[2], x4 = v[3];
    DenseVector g(4);
    g[0] = 400.0 * x1 * (x1 * x1 - x2) + 2.0 * (x1 - 1.0);
    g[1] = -200.0 * (x1 * x1 - x2) + 20.2 * (x2 - 1.0) + 19.8 * (x4 - 1.0);
    g[2] = 2.0 * (x3 - 1.0) + 360.0 * x3 * (x3 * x3 - x4);
    g[3] = -180.0 * (x3 * x3 - x4) + 20.2 * (x4 - 1.0) + 19.8 * (x2 - 1.0);
    return g;
  };
  p.default_x0 = detail::start_point(4);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector::ones(4);
  return p;
}

inline Problem three_hump_camel() {
  Problem p;
  p.name = "three-hump-camel";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    return 2.0 * x * x - 1.05 * x * x * x * x + x * x * x * x * x * x / 6.0 + x * y + y * y;
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    return DenseVector{4.0 * x - 4.2 * x * x * x + x * x * x * x * x + y, x + 2.0 * y};
  };
  p.default_x0 = detail::start_point(2);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector{0.0, 0.0};
  return p;
}

inline Problem six_hump_camel() {
  Problem p;
  p.name = "six-hump-camel";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    return 4.0 * x * x - 2.1 * x * x * x * x + x * x * x * x * x * x / 3.0 + x * y -
           4.0 * y * y + 4.0 * y * y * y * y;
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    return DenseVector{8.0 * x - 8.4 * x * x * x + 2.0 * x * x * x * x * x + y,
                       x - 8.0 * y + 16.0 * y * y * y};
  };
  p.default_x0 = detail::start_point(2);
  return p;
}

/// f = x^4 + 4 x^3 + 4 x^2 + y^2
inline Problem trecanni() {
  Problem p;
  p.name = "trecanni";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    return x * x * x * x + 4.0 * x * x * x + 4.0 * x * x + y * y;
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    return DenseVector{4.0 * x * x * x + 12.0 * x * x + 8.0 * x, 2.0 * y};
  };
  p.default_x0 = detail::start_point(2);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector{0.0, 0.0};
  return p;
}

/// f = (x^2 + y^2 - 2x)^2 + x/4
inline Problem zettl() {
  Problem p;
  p.name = "zettl";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double u = x * x + y * y - 2.0 * x;
    return u * u + 0.25 * x;
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double u = x * x + y * y - 2.0 * x;
    return DenseVector{2.0 * u * (2.0 * x - 2.0) + 0.25, 4.0 * u * y};
  };
  p.default_x0 = detail::start_point(2);
  return p;
}

inline Problem levy13() {
  Problem p;
  p.name = "levy13";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double s3x = std::sin(3.0 * kPi * x);
    const double s3y = std::sin(3.0 * kPi * y);
    const double s2y = std::sin(2.0 * kPi * y);
    return s3x * s3x + (x - 1.0) * (x - 1.0) * (1.0 + s3y * s3y) +
           (y - 1.0) * (y - 1.0) * (1.0 + s2y * s2y);
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double s3x = std::sin(3.0 * kPi * x), c3x = std::cos(3.0 * kPi * x);
    const double s3y = std::sin(3.0 * kPi * y), c3y = std::cos(3.0 * kPi * y);
    const double s2y = std::sin(2.0 * kPi * y), c2y = std::cos(2.0 * kPi * y);
    DenseVector g(2);
    g[0] = 6.0 * kPi * s3x * c3x + 2.0 * (x - 1.0) * (1.0 + s3y * s3y);
    g[1] = (x - 1.0) * (x - 1.0) * 6.0 * kPi * s3y * c3y +
           2.0 * (y - 1.0) * (1.0 + s2y * s2y) +
           (y - 1.0) * (y - 1.0) * 4.0 * kPi * s2y * c2y;
    return g;
  };
  p.default_x0 = detail::start_point(2);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector{1.0, 1.0};
  return p;
}

/// f = (1 - 8x + 7x^2 - 7x^3/3 + x^4/4) y^2 e^{-y}
inline Problem hosaki() {
  Problem p;
  p.name = "hosaki";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double poly =
        1.0 - 8.0 * x + 7.0 * x * x - 7.0 / 3.0 * x * x * x + 0.25 * x * x * x * x;
    return poly * y * y * std::exp(-y);
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    const double poly =
        1.0 - 8.0 * x + 7.0 * x * x - 7.0 / 3.0 * x * x * x + 0.25 * x * x * x * x;
    const double dpoly = -8.0 + 14.0 * x - 7.0 * x * x + x * x * x;
    const double ey = std::exp(-y);
    return DenseVector{dpoly * y * y * ey, poly * (2.0 * y - y * y) * ey};
  };
  p.default_x0 = detail::start_point(2);
  return p;
}

inline Problem drop_wave() {
  Problem p;
  p.name = "drop-wave";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double r2 = v[0] * v[0] + v[1] * v[1];
    return -(1.0 + std::cos(12.0 * std::sqrt(r2))) / (0.5 * r2 + 2.0);
  };
  p.eval_g = [](const DenseVector& v) {
    const double r2 = v[0] * v[0] + v[1] * v[1];
    const double r = std::sqrt(r2);
    DenseVector g(2, 0.0);
    if (r == 0.0) return g;
    const double num = 1.0 + std::cos(12.0 * r);
    const double den = 0.5 * r2 + 2.0;
    const double dnum_dr = -12.0 * std::sin(12.0 * r);
    for (int i = 0; i < 2; ++i) {
      const double dr = v[i] / r;
      g[i] = -(dnum_dr * dr * den - num * v[i]) / (den * den);
    }
    return g;
  };
  p.default_x0 = detail::start_point(2);
  p.known_f_min = -1.0;
  p.known_minimizer = DenseVector{0.0, 0.0};
  return p;
}

/// f = sum_{i=0..9} (e^{-i x / 10} - 5 e^{-i y / 10} - e^{-i/10} + 5 e^{-i})^2
inline Problem exp2() {
  Problem p;
  p.name = "exp2";
  p.dim = 2;
  p.eval_f = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    double f = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double di = double(i);
      const double t = std::exp(-di * x / 10.0) - 5.0 * std::exp(-di * y / 10.0) -
                       std::exp(-di / 10.0) + 5.0 * std::exp(-di);
      f += t * t;
    }
    return f;
  };
  p.eval_g = [](const DenseVector& v) {
    const double x = v[0], y = v[1];
    DenseVector g(2, 0.0);
    for (int i = 0; i < 10; ++i) {
      const double di = double(i);
      const double ex = std::exp(-di * x / 10.0);
      const double ey = std::exp(-di * y / 10.0);
      const double t = ex - 5.0 * ey - std::exp(-di / 10.0) + 5.0 * std::exp(-di);
      g[0] += 2.0 * t * (-di / 10.0) * ex;
      g[1] += 2.0 * t * (di / 2.0) * ey;
    }
    return g;
  };
  p.default_x0 = detail::start_point(2);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector{1.0, 10.0};
  return p;
}

/// f = sum_{k=1..4} ((sum_i x_i^k) - b_k)^2 with b = (8, 18, 44, 114)
inline Problem power_sum() {
  Problem p;
  p.name = "power-sum";
  p.dim = 4;
  p.eval_f = [](const DenseVector& x) {
    static constexpr double b[4] = {8.0, 18.0, 44.0, 114.0};
    double f = 0.0;
    for (int k = 1; k <= 4; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += std::pow(x[i], double(k));
      const double t = s - b[k - 1];
      f += t * t;
    }
    return f;
  };
  p.eval_g = [](const DenseVector& x) {
    static constexpr double b[4] = {8.0, 18.0, 44.0, 114.0};
    DenseVector g(x.size(), 0.0);
    for (int k = 1; k <= 4; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += std::pow(x[i], double(k));
      const double t = s - b[k - 1];
      for (std::size_t i = 0; i < x.size(); ++i)
        g[i] += 2.0 * t * double(k) * std::pow(x[i], double(k - 1));
    }
    return g;
  };
  p.default_x0 = detail::start_point(4);
  p.known_f_min = 0.0;
  p.known_minimizer = DenseVector{1.0, 2.0, 2.0, 3.0};
  return p;
}

}  // namespace problems

/// One catalog row: a factory plus its default dimension.
struct CatalogEntry {
  std::string name;
  bool parametric = false;
  std::size_t default_dim = 2;
  bool mandatory = true;
  std::function<Problem(std::size_t)> make;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  using namespace problems;
  auto fixed = [](Problem (*fn)()) {
    return [fn](std::size_t) { return fn(); };
  };
  static const std::vector<CatalogEntry> entries = {
      {"trid", true, 1000, true, [](std::size_t n) { return trid(n); }},
      {"rosenbrock", true, 1000, true, [](std::size_t n) { return rosenbrock(n); }},
      {"dixon-price", true, 1000, true, [](std::size_t n) { return dixon_price(n); }},
      {"levy", true, 1000, true, [](std::size_t n) { return levy(n); }},
      {"powell", true, 1000, true, [](std::size_t n) { return powell(n); }},
      {"rastrigin", true, 1000, true, [](std::size_t n) { return rastrigin(n); }},
      {"rotated-hyper-ellipsoid", true, 1000, true,
       [](std::size_t n) { return rotated_hyper_ellipsoid(n); }},
      {"schwefel", true, 1000, true, [](std::size_t n) { return schwefel(n); }},
      {"sphere", true, 1000, true, [](std::size_t n) { return sphere(n); }},
      {"styblinski-tang", true, 1000, true, [](std::size_t n) { return styblinski_tang(n); }},
      {"sum-squares", true, 1000, true, [](std::size_t n) { return sum_squares(n); }},
      {"beale", false, 2, true, fixed(beale)},
      {"booth", false, 2, true, fixed(booth)},
      {"branin", false, 2, true, fixed(branin)},
      {"easom", false, 2, true, fixed(easom)},
      {"griewank", true, 10, true, [](std::size_t n) { return griewank(n); }},
      {"matyas", false, 2, true, fixed(matyas)},
      {"mccormick", false, 2, true, fixed(mccormick)},
      {"zakharov", true, 10, true, [](std::size_t n) { return zakharov(n); }},
      {"bohachevsky", false, 2, true, fixed(bohachevsky)},
      {"colville", false, 4, true, fixed(colville)},
      {"three-hump-camel", false, 2, true, fixed(three_hump_camel)},
      {"six-hump-camel", false, 2, true, fixed(six_hump_camel)},
      {"trecanni", false, 2, true, fixed(trecanni)},
      {"zettl", false, 2, true, fixed(zettl)},
      {"ackley", true, 1000, false, [](std::size_t n) { return ackley(n); }},
      {"rosenbrock-chained", true, 1000, false,
       [](std::size_t n) { return rosenbrock_chained(n); }},
      {"levy13", false, 2, false, fixed(levy13)},
      {"hosaki", false, 2, false, fixed(hosaki)},
      {"drop-wave", false, 2, false, fixed(drop_wave)},
      {"exp2", false, 2, false, fixed(exp2)},
      {"power-sum", false, 4, false, fixed(power_sum)},
  };
  return entries;
}

/// All cataloged problems at their default dimensions.
inline std::vector<Problem> catalog() {
  std::vector<Problem> out;
  for (const CatalogEntry& e : catalog_entries()) out.push_back(e.make(e.default_dim));
  return out;
}

inline std::vector<std::string> problem_names() {
  std::vector<std::string> out;
  for (const CatalogEntry& e : catalog_entries()) out.push_back(e.name);
  return out;
}

inline std::vector<std::string> mandatory_problem_names() {
  std::vector<std::string> out;
  for (const CatalogEntry& e : catalog_entries())
    if (e.mandatory) out.push_back(e.name);
  return out;
}

namespace detail {

inline std::string normalize_name(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  std::replace(s.begin(), s.end(), '_', '-');
  std::replace(s.begin(), s.end(), ' ', '-');
  return s;
}

inline std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

inline std::vector<std::string> suggest(const std::string& wanted,
                                        const std::vector<std::string>& known) {
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const std::string& k : known) {
    const std::size_t d = edit_distance(wanted, k);
    if (d <= std::max<std::size_t>(3, wanted.size() / 3) ||
        k.find(wanted) != std::string::npos)
      scored.emplace_back(d, k);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (auto& [d, k] : scored) out.push_back(k);
  if (out.empty()) out = known;
  return out;
}

}  // namespace detail

/// Looks a problem up by name, optionally overriding the dimension of
/// parametric problems. Unknown names raise UsageError with suggestions.
inline Problem problem_by_name(const std::string& name,
                               std::optional<std::size_t> n = std::nullopt) {
  const std::string wanted = detail::normalize_name(name);
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.name != wanted) continue;
    if (n && !e.parametric && *n != e.default_dim)
      throw DomainError(e.name + ": dimension is fixed at " + std::to_string(e.default_dim));
    return e.make(n.value_or(e.default_dim));
  }
  throw UsageError("unknown problem '" + name + "'",
                   detail::suggest(wanted, problem_names()));
}

}  // namespace eptctr

#endif  // EPTCTR_PROBLEMS_HPP

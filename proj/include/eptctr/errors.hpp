#ifndef EPTCTR_ERRORS_HPP
#define EPTCTR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eptctr {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An objective, gradient or Hessian evaluation produced a NaN or infinity.
class NonFiniteEvaluation : public Error {
 public:
  explicit NonFiniteEvaluation(const std::string& what, std::size_t coordinate = 0)
      : Error(what), coordinate_(coordinate) {}
  /// Index of the offending entry (or probe direction) when known.
  std::size_t coordinate() const noexcept { return coordinate_; }

 private:
  std::size_t coordinate_;
};

/// The diagonal-shift retry of the SPD factorization ran out of budget.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/// The symmetric eigenvalue iteration did not converge.
class EigenFailure : public Error {
 public:
  using Error::Error;
};

/// A curvature pair with y's == 0 reached the rank-two inverse update.
class DegenerateCurvature : public Error {
 public:
  using Error::Error;
};

/// The predicted model reduction vanished; the step must be rejected.
class DegenerateModel : public Error {
 public:
  using Error::Error;
};

/// An argument violated a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A test oracle's inner iteration failed to converge.
class OracleFailure : public Error {
 public:
  using Error::Error;
};

/// An unknown problem or method name was requested.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what, std::vector<std::string> suggestions = {})
      : Error(what), suggestions_(std::move(suggestions)) {}
  const std::vector<std::string>& suggestions() const noexcept { return suggestions_; }

 private:
  std::vector<std::string> suggestions_;
};

}  // namespace eptctr

#endif  // EPTCTR_ERRORS_HPP

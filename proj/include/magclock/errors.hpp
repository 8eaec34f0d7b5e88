#ifndef MAGCLOCK_ERRORS_HPP
#define MAGCLOCK_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace magclock {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Index or argument above a configured cap.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
/// Carries whatever the integrator had when it gave up.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double partial, double error,
                   std::optional<unsigned> level = std::nullopt)
      : std::runtime_error(what), partial_(partial), error_(error), level_(level) {}

  double partial_result() const noexcept { return partial_; }
  double error_estimate() const noexcept { return error_; }
  /// Landau level of the daughter whose contribution failed, when known.
  std::optional<unsigned> level() const noexcept { return level_; }

 private:
  double partial_;
  double error_;
  std::optional<unsigned> level_;
};

}  // namespace magclock

#endif  // MAGCLOCK_ERRORS_HPP

#ifndef MAGCLOCK_QUADRATURE_HPP
#define MAGCLOCK_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <optional>

namespace magclock {

/// Tolerances for the adaptive integrator.
struct QuadratureConfig {
  double rel_tol = 1e-9;
  /// Absolute tolerance in the units of the quantity being integrated. When
  /// unset, callers substitute 1e-18 times their natural scale.
  std::optional<double> abs_tol;
  std::size_t max_subdivisions = 2000;

  /// Throws DomainError when rel_tol <= 0, abs_tol < 0 or max_subdivisions == 0.
  void validate() const;
  double abs_tol_or(double scale) const { return abs_tol.value_or(1e-18 * scale); }
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t subdivisions = 0;
  std::size_t evaluations = 0;
};

/// One 21-point Gauss-Kronrod panel with the embedded 10-point Gauss rule.
struct KronrodPanel {
  double value;   // Kronrod estimate
  double error;   // QUADPACK-scaled |K - G|, floored at roundoff
  double abs_value;
};
KronrodPanel gauss_kronrod_21(const std::function<double(double)>& f, double a, double b);

/// Globally adaptive bisection on [a, b] (QAG style): the panel with the
/// largest error is split until the summed error is at most
/// max(abs_tol, rel_tol * |value|). Throws ConvergenceError with the partial
/// result when max_subdivisions panels are not enough.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol, std::size_t max_subdivisions);

inline QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureConfig& cfg, double scale = 1.0) {
  return integrate(f, a, b, cfg.rel_tol, cfg.abs_tol_or(scale), cfg.max_subdivisions);
}

}  // namespace magclock

#endif  // MAGCLOCK_QUADRATURE_HPP

#ifndef MAGCLOCK_ORACLE_HPP
#define MAGCLOCK_ORACLE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "magclock/quadrature.hpp"

namespace magclock {

// Slow reference paths used to check the closed forms the rate engine relies on.

inline constexpr unsigned kOracleMaxIndex = 12;

/// Overlap between parent level m (k_y = 0) and daughter level n (k_y =
/// delta_k_y) with a plane-wave factor e^{-i k_x x} for the neutral daughter.
struct OverlapParams {
  unsigned n = 0;
  unsigned m = 0;
  double k_x_neutral = 0.0;  // MeV
  double delta_k_y = 0.0;    // MeV
  double eB = 1.0;           // MeV^2

  void validate() const;
  /// (delta_k_y^2 + k_x^2) / (2 eB), the closed-form argument.
  double closed_form_argument() const;
};

/// Int dx e^{-i k_x x} I_m(rho_parent(x)) I_n(rho_daughter(x)) by direct
/// quadrature of the real and imaginary parts on a window around both orbit
/// centers that is widened until the value settles.
std::complex<double> overlap_integral_numeric(const OverlapParams& p,
                                              const QuadratureConfig& cfg = {1e-12, 1e-13, 4000});

/// |overlap_integral_numeric|^2. Dimensionless with normalized I_n, so it is
/// compared against overlap_weight(n, m, X) directly.
double a_squared_numeric(const OverlapParams& p, const QuadratureConfig& cfg = {1e-12, 1e-13, 4000});

/// Int I_n(rho(x))^2 dx, should be one.
double wavefunction_norm(unsigned n, double eB, const QuadratureConfig& cfg = {1e-12, 1e-13, 4000});

struct OracleTrial {
  std::size_t index;
  OverlapParams params;
  double numeric;
  double closed_form;
  double rel_error;
};

struct ClosedFormReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-6;
  double max_rel_error = 0.0;
  std::vector<OracleTrial> samples;   // every trial, in draw order
  std::vector<OracleTrial> failures;  // those with rel_error >= tolerance

  bool passed() const { return failures.empty(); }
};

/// Seeded random comparison of overlap_weight against a_squared_numeric with
/// n, m <= 8 and |k_x|, |delta_k_y| <= 3 sqrt(eB). Same seed, same report.
ClosedFormReport verify_closed_form(std::size_t trials, std::uint64_t seed,
                                    double tolerance = 1e-6);

struct CompletenessSum {
  double sum;
  unsigned terms;
};

/// Sum over n of overlap_weight(n, m, x), stopped once past the peak and ten
/// consecutive terms fall below tail_cutoff.
CompletenessSum completeness_sum(unsigned m, double x, double tail_cutoff = 1e-16);

}  // namespace magclock

#endif  // MAGCLOCK_ORACLE_HPP

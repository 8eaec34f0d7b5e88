#ifndef MAGCLOCK_RATE_HPP
#define MAGCLOCK_RATE_HPP

#include <vector>

#include "magclock/landau.hpp"
#include "magclock/quadrature.hpp"

namespace magclock {

struct LevelContribution {
  unsigned n;
  double gamma;  // MeV
  double error;  // MeV
};

/// Outcome of summing the decay rate over every open daughter level.
struct RateResult {
  double gamma_total = 0.0;  // MeV
  std::vector<LevelContribution> level_contributions;
  /// gamma * Gamma / Gamma'_0; exactly one if the clock is ideal.
  double ratio = 0.0;
  double gamma_free_boosted = 0.0;  // Gamma'_0 / gamma, MeV
  unsigned n_max_used = 0;
  double lorentz_gamma = 1.0;  // omega_m / M_parent
  double error_total = 0.0;    // summed quadrature error estimate, MeV
};

/// Integrand of the kz integral for daughter level n, in 1/MeV:
/// overlap_weight(n, m, X) / omega_n with X = ((omega_m - omega_n)^2 - kz^2) / (2 eB).
/// Throws DomainError outside |kz| <= kz_max(n).
double level_integrand(const DecayChannel& channel, const MagnetizedState& state, unsigned n,
                       double kz);

struct LevelRate {
  double value;  // MeV
  double error;  // MeV
};

/// G^2/(16 pi omega_m) times the kz integral over [-kz_max, kz_max], folded
/// onto [0, kz_max]. Throws ConvergenceError tagged with n.
LevelRate level_contribution(const DecayChannel& channel, const MagnetizedState& state,
                             unsigned n, const QuadratureConfig& cfg = {});

/// Full rate: levels 0..n_max, optionally spread over `threads` workers, then
/// reduced in ascending n with compensated summation so the result does not
/// depend on the thread count.
RateResult decay_rate(const DecayChannel& channel, const MagnetizedState& state,
                      const QuadratureConfig& cfg = {}, unsigned threads = 1);

/// Field-free rest-frame rate G^2/(16 pi M) (1 - M_e^2/M^2).
double free_rate_rest(const DecayChannel& channel);
/// Time-dilated rate Gamma'_0 / gamma.
double free_rate_boosted(const DecayChannel& channel, double lorentz_gamma);
double lifetime(double rate);

/// gamma Gamma / Gamma'_0 for m = n = 0, reduced directly from the general
/// level sum:
///
///   2 e^{-(1 + M^2/2eB)} Int_0^{x_max} dk e^{s t(k)} / (sqrt(eB) t(k)),
///   s = sqrt(1 + M^2/eB), t(k) = sqrt(1 + k^2/eB), x_max = M^2 / (2 sqrt(M^2 + eB)).
///
/// Requires a massless charged daughter and eB > M^2/2 so that only n = 0 is open.
double lll_rate_exact(const DecayChannel& channel, double eB, const QuadratureConfig& cfg = {});

/// Same regime, with the exponential split into e^{-s} outside the integral
/// and e^{t(k)} inside, as printed in the original derivation. Kept for
/// comparison; it does not reduce to lll_rate_exact.
double lll_rate_paper(const DecayChannel& channel, double eB, const QuadratureConfig& cfg = {});

}  // namespace magclock

#endif  // MAGCLOCK_RATE_HPP

#include "magclock/landau.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "magclock/errors.hpp"
#include "magclock/specfun.hpp"

namespace magclock {

void DecayChannel::validate() const {
  if (!(parent_mass >= 0.0) || !(charged_mass >= 0.0) || !(neutral_mass >= 0.0)) {
    throw DomainError("decay channel: masses must be non-negative");
  }
  if (!(coupling > 0.0)) throw DomainError("decay channel: coupling G must be positive");
  if (!(parent_mass > charged_mass + neutral_mass)) {
    throw DomainError("decay channel: parent mass must exceed the sum of daughter masses");
  }
}

void MagnetizedState::validate() const {
  if (!(eB > 0.0) || !std::isfinite(eB)) throw DomainError("magnetized state: eB must be positive");
  if (kz != 0.0) throw DomainError("magnetized state: only parent kz = 0 is supported");
}

double omega(double mass, unsigned n, double eB, double kz) {
  if (!(eB > 0.0)) throw DomainError("omega: eB must be positive");
  if (!(mass >= 0.0)) throw DomainError("omega: mass must be non-negative");
  return std::sqrt(mass * mass + (2.0 * n + 1.0) * eB + kz * kz);
}

double parent_energy(const DecayChannel& channel, const MagnetizedState& state) {
  return omega(channel.parent_mass, state.level, state.eB, state.kz);
}

std::optional<unsigned> n_max(const DecayChannel& channel, const MagnetizedState& state) {
  channel.validate();
  state.validate();
  const double w = parent_energy(channel, state);
  const double me2 = channel.charged_mass * channel.charged_mass;
  double bound = (w * w - state.eB - me2) / (2.0 * state.eB);
  if (std::abs(bound - std::round(bound)) < 1e-9) bound -= 1e-12;
  if (bound < 0.0) return std::nullopt;
  return static_cast<unsigned>(std::floor(bound));
}

double kz_max(const DecayChannel& channel, const MagnetizedState& state, unsigned n) {
  const auto top = n_max(channel, state);
  if (!top || n > *top) {
    throw RangeError("kz_max: daughter level " + std::to_string(n) +
                     " is above the kinematic cutoff");
  }
  const double w = parent_energy(channel, state);
  const double me2 = channel.charged_mass * channel.charged_mass;
  return std::max(0.0, (w * w - me2 - (2.0 * n + 1.0) * state.eB) / (2.0 * w));
}

double eB_for_p_perp(double p_perp_sq, unsigned m) {
  if (!(p_perp_sq > 0.0)) throw DomainError("eB_for_p_perp: p_perp^2 must be positive");
  return p_perp_sq / (2.0 * m + 1.0);
}

double eB_for_radius(double radius, unsigned m) {
  if (!(radius > 0.0)) throw DomainError("eB_for_radius: radius must be positive");
  return (2.0 * m + 1.0) / (radius * radius);
}

double p_perp_for_radius(double radius, unsigned m) {
  if (!(radius > 0.0)) throw DomainError("p_perp_for_radius: radius must be positive");
  return (2.0 * m + 1.0) / radius;
}

double orbit_radius_sq(unsigned n, double eB) {
  if (!(eB > 0.0)) throw DomainError("orbit_radius_sq: eB must be positive");
  return (2.0 * n + 1.0) / eB;
}

double wavefunction_I(unsigned n, double eB, double rho) {
  if (!(eB > 0.0)) throw DomainError("wavefunction_I: eB must be positive");
  if (n > kHermiteMaxDegree) {
    throw RangeError("wavefunction_I: level exceeds cap " + std::to_string(kHermiteMaxDegree));
  }
  const auto h = hermite_log(n, rho);
  if (h.sign == 0) return 0.0;
  const double log_norm = 0.5 * (0.5 * std::log(eB) - 0.5 * std::log(std::numbers::pi) -
                                 n * std::numbers::ln2 - std::lgamma(n + 1.0));
  return h.sign * std::exp(log_norm - 0.5 * rho * rho + h.log_abs);
}

LandauWavefunction LandauWavefunction::with_momentum(unsigned n, double eB, double k_y) {
  if (!(eB > 0.0)) throw DomainError("LandauWavefunction: eB must be positive");
  return {n, eB, k_y / std::sqrt(eB)};
}

double LandauWavefunction::rho(double x) const { return std::sqrt(eB) * x + center_offset; }

double LandauWavefunction::operator()(double x) const { return wavefunction_I(n, eB, rho(x)); }

}  // namespace magclock

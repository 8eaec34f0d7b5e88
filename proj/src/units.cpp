#include "magclock/units.hpp"

#include <numbers>

#include "magclock/errors.hpp"

namespace magclock {

double radius_si(double p_perp, unsigned m_level, const PhysicalConstants& k) {
  if (!(p_perp > 0.0)) throw DomainError("radius_si: p_perp must be positive");
  return (2.0 * m_level + 1.0) / p_perp * k.hbar_c_MeV_m();
}

double acceleration_si(double p_perp, unsigned m_level, double omega,
                       const PhysicalConstants& k) {
  if (!(p_perp > 0.0)) throw DomainError("acceleration_si: p_perp must be positive");
  if (!(omega > 0.0)) throw DomainError("acceleration_si: omega must be positive");
  const double a_MeV = p_perp * p_perp * p_perp / ((2.0 * m_level + 1.0) * omega * omega);
  return a_MeV / k.hbar_MeV_s * k.c_m_per_s;
}

double de_broglie_si(double p_perp, const PhysicalConstants& k) {
  if (!(p_perp > 0.0)) throw DomainError("de_broglie_si: p_perp must be positive");
  return 2.0 * std::numbers::pi * k.hbar_c_MeV_m() / p_perp;
}

double eB_to_gauss(double eB, const PhysicalConstants& k) {
  if (!(eB >= 0.0)) throw DomainError("eB_to_gauss: eB must be non-negative");
  return eB / (k.electron_mass_MeV * k.electron_mass_MeV) * k.electron_critical_field_gauss;
}

double classical_radius(double p_perp, double eB) {
  if (!(p_perp > 0.0)) throw DomainError("classical_radius: p_perp must be positive");
  if (!(eB > 0.0)) throw DomainError("classical_radius: eB must be positive");
  return p_perp / eB;
}

double classical_acceleration(double p_perp, double eB, double gamma, double mass) {
  if (!(p_perp > 0.0) || !(eB > 0.0) || !(gamma > 0.0) || !(mass > 0.0)) {
    throw DomainError("classical_acceleration: all inputs must be positive");
  }
  return eB * p_perp / (gamma * gamma * mass * mass);
}

OrbitObservables orbit_observables(double p_perp, unsigned m_level, double omega, double eB,
                                   const PhysicalConstants& k) {
  return {radius_si(p_perp, m_level, k), acceleration_si(p_perp, m_level, omega, k),
          de_broglie_si(p_perp, k), eB_to_gauss(eB, k)};
}

}  // namespace magclock

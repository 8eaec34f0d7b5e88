#ifndef MAGCLOCK_UNITS_HPP
#define MAGCLOCK_UNITS_HPP

namespace magclock {

// Everything inside the library is in natural units (hbar = c = 1, energies
// in MeV, lengths in 1/MeV, |e|B in MeV^2). Conversion to SI happens here only.

/// CODATA 2018 values.
struct PhysicalConstants {
  double hbar_c_MeV_fm = 197.3269804;
  double hbar_MeV_s = 6.582119569e-22;
  double c_m_per_s = 2.99792458e8;
  double electron_mass_MeV = 0.51099895000;
  /// B at which |e|B equals the electron mass squared.
  double electron_critical_field_gauss = 4.414e13;

  double hbar_c_MeV_m() const { return hbar_c_MeV_fm * 1e-15; }
};

inline constexpr PhysicalConstants kConstants{};

/// Orbit of a charged particle in Landau level m, in SI units.
struct OrbitObservables {
  double radius_m;
  double acceleration_m_s2;
  double de_broglie_m;
  double field_gauss;
};

/// (2m+1)/p_perp converted to meters.
double radius_si(double p_perp, unsigned m_level,
                 const PhysicalConstants& k = kConstants);

/// p_perp^3 / ((2m+1) omega^2) converted to m/s^2.
double acceleration_si(double p_perp, unsigned m_level, double omega,
                       const PhysicalConstants& k = kConstants);

/// 2 pi / p_perp converted to meters.
double de_broglie_si(double p_perp, const PhysicalConstants& k = kConstants);

/// Linear scaling from the electron critical field.
double eB_to_gauss(double eB, const PhysicalConstants& k = kConstants);

/// Classical cyclotron radius p_perp/|e|B, in 1/MeV.
double classical_radius(double p_perp, double eB);

/// Classical centripetal acceleration |e|B p_perp / (gamma^2 M^2), in MeV.
double classical_acceleration(double p_perp, double eB, double gamma, double mass);

/// All four observables for a parent in level m with transverse momentum
/// p_perp, energy omega and field eB.
OrbitObservables orbit_observables(double p_perp, unsigned m_level, double omega, double eB,
                                   const PhysicalConstants& k = kConstants);

}  // namespace magclock

#endif  // MAGCLOCK_UNITS_HPP

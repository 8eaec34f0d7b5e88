#ifndef MAGCLOCK_LANDAU_HPP
#define MAGCLOCK_LANDAU_HPP

#include <optional>

namespace magclock {

/// Two-body scalar decay parent -> charged + neutral with cubic coupling G.
/// Masses and G in MeV.
struct DecayChannel {
  double parent_mass = 105.7;
  double charged_mass = 0.0;
  double neutral_mass = 0.0;
  double coupling = 1.0;

  /// Throws DomainError unless masses >= 0, G > 0 and the decay is open.
  void validate() const;
};

/// Parent in Landau level `level` of a field with strength eB = |e|B (MeV^2).
/// The parent's longitudinal momentum is pinned to zero.
struct MagnetizedState {
  double eB = 0.0;
  unsigned level = 0;
  double kz = 0.0;

  void validate() const;
};

/// Landau energy sqrt(M^2 + (2n+1) eB + kz^2).
double omega(double mass, unsigned n, double eB, double kz = 0.0);

double parent_energy(const DecayChannel& channel, const MagnetizedState& state);

/// Highest daughter level reachable by energy conservation, or nullopt when
/// even n = 0 is closed. Exact saturation (phase space of zero measure) is
/// excluded deterministically.
std::optional<unsigned> n_max(const DecayChannel& channel, const MagnetizedState& state);

/// Largest |kz| of the charged daughter in level n. Throws RangeError for
/// n > n_max.
double kz_max(const DecayChannel& channel, const MagnetizedState& state, unsigned n);

/// Field that holds a parent of transverse momentum^2 p_perp_sq in level m.
double eB_for_p_perp(double p_perp_sq, unsigned m);
/// Field and transverse momentum for an orbit of radius R (1/MeV) in level m.
double eB_for_radius(double radius, unsigned m);
double p_perp_for_radius(double radius, unsigned m);

/// Squared orbit radius (2n+1)/eB in MeV^-2.
double orbit_radius_sq(unsigned n, double eB);

/// Normalized transverse Landau wavefunction I_n(rho) in MeV^{1/2}; the
/// normalization is assembled in log space and the sign taken from H_n.
double wavefunction_I(unsigned n, double eB, double rho);

/// I_n as a function of x for a state of transverse momentum k_y:
/// rho = sqrt(eB) x + center_offset, with center_offset = k_y / sqrt(eB).
struct LandauWavefunction {
  unsigned n;
  double eB;
  double center_offset;

  static LandauWavefunction with_momentum(unsigned n, double eB, double k_y);
  double rho(double x) const;
  double operator()(double x) const;
};

}  // namespace magclock

#endif  // MAGCLOCK_LANDAU_HPP

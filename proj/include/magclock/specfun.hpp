#ifndef MAGCLOCK_SPECFUN_HPP
#define MAGCLOCK_SPECFUN_HPP

namespace magclock {

/// Largest Hermite degree accepted by hermite() before its plain recurrence
/// risks overflow.
inline constexpr unsigned kHermiteMaxDegree = 200;
/// Cap on degree and order for the unnormalized laguerre_assoc() path.
inline constexpr unsigned kLaguerreMaxDegree = 200;
/// Caps for overlap_weight().
inline constexpr unsigned kOverlapMaxIndex = 10000;
inline constexpr double kOverlapMaxArgument = 1e6;

/// Physicists' Hermite polynomial H_n(rho) by the three-term recurrence.
double hermite(unsigned n, double rho);

/// ln|H_n(rho)| together with the sign of H_n(rho); rescales internally so it
/// is usable for any n. sign is 0 when H_n(rho) == 0 (log_abs is -inf then).
struct SignedLog {
  double log_abs;
  int sign;
};
SignedLog hermite_log(unsigned n, double rho);

/// Associated Laguerre polynomial L_k^d(x), x >= 0, by upward recurrence.
double laguerre_assoc(unsigned k, unsigned d, double x);

/// ln(min(n,m)! / max(n,m)!), exactly 0 when n == m.
double log_factorial_ratio(unsigned n, unsigned m);

/// Squared overlap between two displaced Landau (number) states:
///
///   (min!/max!) e^{-x} x^{|n-m|} [L_{min}^{|n-m|}(x)]^2
///
/// always in [0, 1]. Symmetric in (n, m) bit-for-bit.
struct OverlapWeight {
  double value;
};

/// Evaluated through the normalized Laguerre function
/// phi_k^d(x) = sqrt(k!/(k+d)!) x^{d/2} e^{-x/2} L_k^d(x), which stays bounded
/// by one, so no intermediate ever overflows; the result is phi^2.
OverlapWeight overlap_weight(unsigned n, unsigned m, double x);

}  // namespace magclock

#endif  // MAGCLOCK_SPECFUN_HPP

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "magclock/errors.hpp"
#include "magclock/landau.hpp"

using namespace magclock;

namespace {

const DecayChannel kMuon{105.7, 0.0, 0.0, 1.0};

// Composite Simpson rule, independent of the adaptive integrator.
template <class F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("omega") {
  CHECK(omega(105.7, 0, 100.0, 0.0) == doctest::Approx(106.171983121725667).epsilon(1e-14));
  CHECK(omega(0.0, 0, 42.0, 0.0) == doctest::Approx(std::sqrt(42.0)));
  CHECK(omega(105.7, 65, 30000.0 / 131.0, 0.0) == doctest::Approx(202.910053964804810).epsilon(1e-14));
  CHECK_THROWS_AS(omega(105.7, 0, 0.0, 0.0), DomainError);
}

TEST_CASE("property: omega increases in every argument") {
  for (double eB : {1.0, 100.0, 1e4}) {
    for (unsigned n : {0u, 3u, 50u}) {
      CHECK(omega(105.7, n + 1, eB) > omega(105.7, n, eB));
      CHECK(omega(105.7, n, eB * 1.01) > omega(105.7, n, eB));
      CHECK(omega(105.7, n, eB, 2.0) > omega(105.7, n, eB, 1.0));
      CHECK(omega(105.7, n, eB, -2.0) > omega(105.7, n, eB, 1.0));
      CHECK(omega(106.0, n, eB) > omega(105.7, n, eB));
    }
  }
}

TEST_CASE("n_max") {
  const MagnetizedState s65{eB_for_p_perp(3e4, 65), 65, 0.0};
  CHECK(n_max(kMuon, s65) == 89u);
  CHECK(n_max(kMuon, MagnetizedState{105.7 * 105.7, 0, 0.0}) == 0u);
  // Massless charged daughter: level 0 never closes.
  CHECK(n_max(kMuon, MagnetizedState{1e12, 0, 0.0}) == 0u);
  const DecayChannel heavy{105.7, 50.0, 0.0, 1.0};
  CHECK(n_max(heavy, MagnetizedState{1e12, 0, 0.0}) == 0u);
}

TEST_CASE("n_max excludes an exactly saturated level") {
  // M^2 = 2*eB*k + eB*... choose eB so that (omega^2 - eB)/(2 eB) = 4 exactly
  // with m = 0: M^2 / (2 eB) = 4.
  const DecayChannel ch{4.0, 0.0, 0.0, 1.0};
  const MagnetizedState s{2.0, 0, 0.0};
  CHECK(n_max(ch, s) == 3u);
  CHECK(kz_max(ch, s, 3) > 0.0);
}

TEST_CASE("kz_max") {
  const MagnetizedState s65{eB_for_p_perp(3e4, 65), 65, 0.0};
  CHECK(kz_max(kMuon, s65, 0) == doctest::Approx(100.890718735686576).epsilon(1e-13));
  const MagnetizedState lll{100.0, 0, 0.0};
  CHECK(kz_max(kMuon, lll, 0) == doctest::Approx(52.6150575297759768).epsilon(1e-13));
  CHECK_THROWS_AS(kz_max(kMuon, s65, 90), RangeError);
}

TEST_CASE("property: kz_max strictly decreases with n") {
  for (double p2 : {1e3, 1e4}) {
    for (unsigned m : {0u, 5u, 30u}) {
      const MagnetizedState s{eB_for_p_perp(p2, m), m, 0.0};
      const unsigned top = *n_max(kMuon, s);
      for (unsigned n = 0; n < top; ++n) {
        CHECK(kz_max(kMuon, s, n + 1) < kz_max(kMuon, s, n));
      }
      // Extrapolating the linear bound one level past n_max crosses zero.
      const double w = parent_energy(kMuon, s);
      CHECK((w * w - (2.0 * (top + 1) + 1.0) * s.eB) <= 0.0);
    }
  }
}

TEST_CASE("state and channel validation") {
  CHECK_THROWS_AS((DecayChannel{1.0, 0.6, 0.5, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((DecayChannel{1.0, 0.0, 0.0, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((DecayChannel{1.0, -0.1, 0.0, 1.0}.validate()), DomainError);
  CHECK_THROWS_AS((MagnetizedState{0.0, 1, 0.0}.validate()), DomainError);
  CHECK_THROWS_AS((MagnetizedState{1.0, 1, 0.5}.validate()), DomainError);
}

TEST_CASE("field, radius and momentum relations") {
  CHECK(eB_for_p_perp(3e4, 65) == doctest::Approx(229.007633587786).epsilon(1e-14));
  CHECK(eB_for_p_perp(17.0, 0) == 17.0);
  CHECK(eB_for_radius(0.1, 0) == doctest::Approx(100.0));
  CHECK(p_perp_for_radius(0.1, 10) == doctest::Approx(210.0));
  CHECK(orbit_radius_sq(0, 100.0) == doctest::Approx(0.01));
  CHECK(orbit_radius_sq(5, 1000.0 / 11.0) == doctest::Approx(0.121));
  for (unsigned m : {0u, 2u, 30u, 500u}) {
    for (double v : {0.01, 0.1, 3.0}) {
      CHECK((2.0 * m + 1.0) * eB_for_p_perp(v * 1e4, m) == doctest::Approx(v * 1e4).epsilon(1e-15));
      const double p = p_perp_for_radius(v, m);
      CHECK(p * p == doctest::Approx((2.0 * m + 1.0) * eB_for_radius(v, m)).epsilon(1e-14));
      // Quantum orbit radius agrees with the classical one at p^2 = (2m+1) eB.
      const double eB = eB_for_radius(v, m);
      CHECK(std::sqrt(orbit_radius_sq(m, eB)) == doctest::Approx(p / eB).epsilon(1e-14));
    }
  }
}

TEST_CASE("property: classical and quantum energies agree on eB = (2m+1)/R^2") {
  for (double M : {0.0, 105.7}) {
    for (unsigned m : {0u, 1u, 20u, 300u}) {
      for (double R : {0.01, 0.1, 2.0}) {
        const double eB = eB_for_radius(R, m);
        const double classical = std::sqrt(M * M + (eB * R) * (eB * R));
        CHECK(classical == doctest::Approx(omega(M, m, eB)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("wavefunction_I") {
  const double eB = 37.0;
  CHECK(wavefunction_I(0, eB, 0.0) == doctest::Approx(std::pow(eB / std::numbers::pi, 0.25)).epsilon(1e-15));
  for (unsigned n = 0; n <= 12; ++n) {
    for (double r : {0.3, 1.9, 4.4}) {
      const double sign = n % 2 ? -1.0 : 1.0;
      CHECK(wavefunction_I(n, eB, -r) == doctest::Approx(sign * wavefunction_I(n, eB, r)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(wavefunction_I(1, 0.0, 0.0), DomainError);
}

TEST_CASE("wavefunction normalization by Simpson quadrature") {
  for (double eB : {0.5, 40.0, 9000.0}) {
    for (unsigned n = 0; n <= 10; ++n) {
      const auto psi = LandauWavefunction::with_momentum(n, eB, 0.3 * std::sqrt(eB));
      const double center = -0.3 / std::sqrt(eB);
      const double half = 14.0 / std::sqrt(eB);
      const double norm = simpson([&](double x) { return psi(x) * psi(x); }, center - half,
                                  center + half, 4000);
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

#include <cmath>

#include "doctest.h"
#include "magclock/errors.hpp"
#include "magclock/oracle.hpp"
#include "magclock/specfun.hpp"

using namespace magclock;

TEST_CASE("a_squared_numeric spot values") {
  CHECK(a_squared_numeric({0, 0, 0.0, 0.0, 50.0}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a_squared_numeric({0, 1, 0.0, 0.0, 50.0}) < 1e-24);
  CHECK(a_squared_numeric({4, 2, 0.0, 0.0, 3.0}) < 1e-24);
}

TEST_CASE("a_squared_numeric matches the closed form") {
  const OverlapParams cases[] = {
      {3, 5, 4.0, -2.5, 10.0}, {8, 0, 1.0, 7.0, 25.0}, {6, 6, -30.0, 12.0, 400.0},
      {1, 8, 0.5, 0.0, 1.0},   {12, 9, 2.0, 2.0, 3.0},
  };
  for (const auto& p : cases) {
    const double numeric = a_squared_numeric(p);
    const double closed = overlap_weight(p.n, p.m, p.closed_form_argument()).value;
    INFO("n=" << p.n << " m=" << p.m);
    CHECK(numeric == doctest::Approx(closed).epsilon(1e-9));
  }
}

TEST_CASE("property: conjugation and rotation invariance") {
  const double eB = 20.0;
  for (unsigned n : {0u, 3u, 7u}) {
    for (unsigned m : {1u, 4u}) {
      const OverlapParams p{n, m, 3.0, -5.0, eB};
      const OverlapParams flipped{n, m, -3.0, 5.0, eB};
      CHECK(a_squared_numeric(flipped) == doctest::Approx(a_squared_numeric(p)).epsilon(1e-10));
      // Same delta_k_y^2 + k_x^2 = 34, different split.
      const OverlapParams rotated{n, m, std::sqrt(34.0), 0.0, eB};
      CHECK(eB * a_squared_numeric(rotated) ==
            doctest::Approx(eB * a_squared_numeric(p)).epsilon(1e-9));
    }
  }
}

TEST_CASE("phase sign of the plane wave does not matter") {
  const OverlapParams p{5, 2, 4.0, 1.5, 9.0};
  const auto plus = overlap_integral_numeric(p);
  const auto minus = overlap_integral_numeric({5, 2, -4.0, 1.5, 9.0});
  CHECK(std::abs(plus) == doctest::Approx(std::abs(minus)).epsilon(1e-12));
}

TEST_CASE("wavefunction normalization") {
  for (unsigned n = 0; n <= kOracleMaxIndex; ++n) {
    for (double eB : {0.1, 10.0, 1e4}) {
      CHECK(wavefunction_norm(n, eB) == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("oracle parameter validation") {
  CHECK_THROWS_AS(a_squared_numeric({13, 0, 0.0, 0.0, 1.0}), RangeError);
  CHECK_THROWS_AS(a_squared_numeric({0, 0, 0.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(verify_closed_form(0, 1), DomainError);
}

TEST_CASE("verify_closed_form") {
  const auto a = verify_closed_form(100, 42);
  CHECK(a.passed());
  CHECK(a.max_rel_error < 1e-6);
  CHECK(a.samples.size() == 100u);
  const auto b = verify_closed_form(100, 42);
  REQUIRE(b.samples.size() == a.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].params.n == b.samples[i].params.n);
    CHECK(a.samples[i].params.k_x_neutral == b.samples[i].params.k_x_neutral);
    CHECK(a.samples[i].numeric == b.samples[i].numeric);
  }
  CHECK(a.max_rel_error == b.max_rel_error);
  // Every draw stays inside the advertised ranges.
  for (const auto& s : a.samples) {
    CHECK(s.params.n <= 8u);
    CHECK(s.params.m <= 8u);
    CHECK(std::abs(s.params.k_x_neutral) <= 3.0 * std::sqrt(s.params.eB));
    CHECK(std::abs(s.params.delta_k_y) <= 3.0 * std::sqrt(s.params.eB));
  }
  // A tolerance nobody can meet is reported as data, not thrown.
  const auto strict = verify_closed_form(5, 42, 0.0);
  CHECK_FALSE(strict.passed());
  CHECK(strict.failures.size() == 5u);
}

TEST_CASE("completeness sums") {
  for (unsigned m : {0u, 5u, 20u, 50u}) {
    for (double x : {0.1, 1.0, 10.0, 100.0}) {
      const auto s = completeness_sum(m, x);
      INFO("m=" << m << " x=" << x);
      CHECK(std::abs(s.sum - 1.0) < 1e-10);
      CHECK(overlap_weight(s.terms - 1, m, x).value < 1e-16);
    }
  }
}

#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "magclock/errors.hpp"
#include "magclock/quadrature.hpp"
#include "magclock/summation.hpp"

using namespace magclock;

TEST_CASE("single Kronrod panel is exact for low-degree polynomials") {
  auto cubic = [](double x) { return 4.0 * x * x * x - 3.0 * x + 1.0; };
  const auto p = gauss_kronrod_21(cubic, -1.0, 2.0);
  // x^4 - 1.5 x^2 + x on [-1, 2]
  CHECK(p.value == doctest::Approx(16.0 - 6.0 + 2.0 - (1.0 - 1.5 - 1.0)).epsilon(1e-14));
  // Only the roundoff floor remains.
  CHECK(p.error <= 50.0 * std::numeric_limits<double>::epsilon() * p.abs_value * (1.0 + 1e-12));
}

TEST_CASE("adaptive integration of smooth and peaked integrands") {
  auto r = integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-12, 0.0, 200);
  CHECK(r.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  CHECK(r.error <= 1e-12 * r.value);

  // Oscillatory: Int_0^{20 pi} sin^2(x) dx = 10 pi.
  auto s = integrate([](double x) { return std::sin(x) * std::sin(x); }, 0.0, 20.0 * std::numbers::pi,
                     1e-11, 0.0, 500);
  CHECK(s.value == doctest::Approx(10.0 * std::numbers::pi).epsilon(1e-11));

  // Endpoint square-root behaviour.
  auto q = integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10, 0.0, 500);
  CHECK(q.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("reported error bounds the true error") {
  for (double k : {1.0, 5.0, 25.0}) {
    auto f = [k](double x) { return std::cos(k * x) * std::exp(-x); };
    const double exact = (1.0 + std::exp(-3.0) * (k * std::sin(3.0 * k) - std::cos(3.0 * k))) /
                         (1.0 + k * k);
    const auto r = integrate(f, 0.0, 3.0, 1e-8, 0.0, 500);
    CHECK(std::abs(r.value - exact) <= r.error);
  }
}

TEST_CASE("degenerate and reversed intervals") {
  auto f = [](double x) { return x; };
  CHECK(integrate(f, 1.0, 1.0, 1e-9, 0.0, 10).value == 0.0);
  CHECK(integrate(f, 2.0, 0.0, 1e-9, 0.0, 10).value == doctest::Approx(-2.0));
}

TEST_CASE("non-convergence carries the partial result") {
  // 1/sqrt-like spike that cannot be resolved with two panels.
  auto spike = [](double x) { return 1.0 / (1e-6 + x * x); };
  try {
    integrate(spike, -1.0, 1.0, 1e-12, 0.0, 2);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.partial_result() > 0.0);
    CHECK(e.error_estimate() > 0.0);
    CHECK_FALSE(e.level().has_value());
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(QuadratureConfig({0.0, std::nullopt, 10}).validate(), DomainError);
  CHECK_THROWS_AS(QuadratureConfig({1e-9, -1.0, 10}).validate(), DomainError);
  CHECK_THROWS_AS(QuadratureConfig({1e-9, std::nullopt, 0}).validate(), DomainError);
  CHECK_NOTHROW(QuadratureConfig{}.validate());
  CHECK(QuadratureConfig{}.abs_tol_or(2.0) == 2e-18);
}

TEST_CASE("compensated sum recovers what naive summation loses") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 10000; ++i) s.add(1e-16);
  s.add(-1.0);
  CHECK(s.value() == doctest::Approx(1e-12).epsilon(1e-10));
}

#include "magclock/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "magclock/errors.hpp"
#include "magclock/landau.hpp"
#include "magclock/specfun.hpp"
#include "magclock/summation.hpp"

namespace magclock {

namespace {

constexpr int kMaxWindowDoublings = 8;

// Uniform double in [0, 1) from the top 53 bits; std::uniform_real_distribution
// is implementation-defined, this is not.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::complex<double> integrate_window(const LandauWavefunction& parent,
                                      const LandauWavefunction& daughter, double k_x,
                                      double lo, double hi, const QuadratureConfig& cfg) {
  auto re = [&](double x) { return std::cos(k_x * x) * parent(x) * daughter(x); };
  auto im = [&](double x) { return -std::sin(k_x * x) * parent(x) * daughter(x); };
  return {integrate(re, lo, hi, cfg).value, integrate(im, lo, hi, cfg).value};
}

}  // namespace

void OverlapParams::validate() const {
  if (!(eB > 0.0) || !std::isfinite(eB)) throw DomainError("oracle: eB must be positive");
  if (n > kOracleMaxIndex || m > kOracleMaxIndex) {
    throw RangeError("oracle: Landau index above " + std::to_string(kOracleMaxIndex));
  }
  if (!std::isfinite(k_x_neutral) || !std::isfinite(delta_k_y)) {
    throw DomainError("oracle: momenta must be finite");
  }
}

double OverlapParams::closed_form_argument() const {
  return (delta_k_y * delta_k_y + k_x_neutral * k_x_neutral) / (2.0 * eB);
}

std::complex<double> overlap_integral_numeric(const OverlapParams& p,
                                              const QuadratureConfig& cfg) {
  p.validate();
  cfg.validate();
  const auto parent = LandauWavefunction::with_momentum(p.m, p.eB, 0.0);
  const auto daughter = LandauWavefunction::with_momentum(p.n, p.eB, p.delta_k_y);

  // Orbit centers sit at -k_y/eB; integrate around their midpoint.
  const double separation = p.delta_k_y / p.eB;
  const double mid = -0.5 * separation;
  const double top = std::max(p.n, p.m);
  double half = (8.0 + std::sqrt(2.0 * top + 1.0)) / std::sqrt(p.eB) + 0.5 * std::abs(separation);

  auto value = integrate_window(parent, daughter, p.k_x_neutral, mid - half, mid + half, cfg);
  for (int i = 0; i < kMaxWindowDoublings; ++i) {
    half *= 2.0;
    const auto wider =
        integrate_window(parent, daughter, p.k_x_neutral, mid - half, mid + half, cfg);
    const double change = std::abs(wider - value);
    value = wider;
    if (change < 1e-12 * std::abs(value) || change < 1e-15) return value;
  }
  throw ConvergenceError("oracle: overlap integral did not settle as the window grew",
                         std::norm(value), 0.0);
}

double a_squared_numeric(const OverlapParams& p, const QuadratureConfig& cfg) {
  return std::norm(overlap_integral_numeric(p, cfg));
}

double wavefunction_norm(unsigned n, double eB, const QuadratureConfig& cfg) {
  const auto psi = LandauWavefunction::with_momentum(n, eB, 0.0);
  const double half = 2.0 * (8.0 + std::sqrt(2.0 * n + 1.0)) / std::sqrt(eB);
  auto density = [&](double x) {
    const double v = psi(x);
    return v * v;
  };
  return integrate(density, -half, half, cfg).value;
}

ClosedFormReport verify_closed_form(std::size_t trials, std::uint64_t seed, double tolerance) {
  if (trials == 0) throw DomainError("verify_closed_form: trials must be positive");
  ClosedFormReport report;
  report.trials = trials;
  report.seed = seed;
  report.tolerance = tolerance;
  report.samples.reserve(trials);

  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    OverlapParams p;
    p.n = static_cast<unsigned>(rng() % 9);
    p.m = static_cast<unsigned>(rng() % 9);
    p.eB = std::pow(10.0, 4.0 * unit_uniform(rng));  // 1 .. 1e4 MeV^2
    const double reach = 3.0 * std::sqrt(p.eB);
    p.k_x_neutral = reach * (2.0 * unit_uniform(rng) - 1.0);
    p.delta_k_y = reach * (2.0 * unit_uniform(rng) - 1.0);

    const double numeric = a_squared_numeric(p);
    const double closed = overlap_weight(p.n, p.m, p.closed_form_argument()).value;
    const double scale = std::max(std::abs(closed), std::abs(numeric));
    const double rel = scale > 0.0 ? std::abs(numeric - closed) / scale : 0.0;

    OracleTrial trial{i, p, numeric, closed, rel};
    report.samples.push_back(trial);
    report.max_rel_error = std::max(report.max_rel_error, rel);
    if (!(rel < tolerance)) report.failures.push_back(trial);
  }
  return report;
}

CompletenessSum completeness_sum(unsigned m, double x, double tail_cutoff) {
  CompensatedSum sum;
  unsigned small_run = 0;
  unsigned n = 0;
  for (; n <= kOverlapMaxIndex; ++n) {
    const double term = overlap_weight(n, m, x).value;
    sum += term;
    small_run = term < tail_cutoff ? small_run + 1 : 0;
    if (n > m + x && small_run >= 10) break;
  }
  return {sum.value(), std::min(n + 1, kOverlapMaxIndex + 1)};
}

}  // namespace magclock

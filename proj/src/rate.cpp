#include "magclock/rate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "magclock/errors.hpp"
#include "magclock/specfun.hpp"
#include "magclock/summation.hpp"

namespace magclock {

namespace {

void require_massless_neutral(const DecayChannel& channel) {
  if (channel.neutral_mass != 0.0) {
    throw DomainError("rate: only a massless neutral daughter is supported");
  }
}

double threshold_factor(const DecayChannel& channel) {
  const double r = channel.charged_mass / channel.parent_mass;
  return 1.0 - r * r;
}

double prefactor(const DecayChannel& channel, double omega_parent) {
  return channel.coupling * channel.coupling / (16.0 * std::numbers::pi * omega_parent);
}

// Everything about daughter level n that does not depend on kz.
class LevelKinematics {
 public:
  LevelKinematics(const DecayChannel& channel, const MagnetizedState& state, unsigned n)
      : m_(state.level),
        n_(n),
        eB_(state.eB),
        omega_parent_(parent_energy(channel, state)),
        daughter_rest_sq_(channel.charged_mass * channel.charged_mass + (2.0 * n + 1.0) * state.eB),
        kz_limit_(kz_max(channel, state, n)) {}

  double kz_limit() const { return kz_limit_; }
  double omega_parent() const { return omega_parent_; }

  double operator()(double kz) const {
    const double k = std::abs(kz);
    if (k > kz_limit_ * (1.0 + 1e-12)) {
      throw DomainError("level_integrand: kz outside the kinematic window of level " +
                        std::to_string(n_));
    }
    const double k2 = k * k;
    const double omega_daughter = std::sqrt(daughter_rest_sq_ + k2);
    // omega_m - omega_n without cancellation.
    const double gap = (omega_parent_ * omega_parent_ - daughter_rest_sq_ - k2) /
                       (omega_parent_ + omega_daughter);
    const double x = std::max(0.0, (gap - k) * (gap + k) / (2.0 * eB_));
    return overlap_weight(n_, m_, x).value / omega_daughter;
  }

 private:
  unsigned m_;
  unsigned n_;
  double eB_;
  double omega_parent_;
  double daughter_rest_sq_;
  double kz_limit_;
};

// 2 * Int_0^{kz_max} of the level integrand (dimensionless), with its error.
QuadratureResult level_integral(const DecayChannel& channel, const MagnetizedState& state,
                                unsigned n, const QuadratureConfig& cfg) {
  const LevelKinematics level(channel, state, n);
  if (level.kz_limit() == 0.0) return {};
  const double pref = prefactor(channel, level.omega_parent());
  const double abs_tol =
      cfg.abs_tol ? *cfg.abs_tol / (2.0 * pref) : 0.5e-18 * threshold_factor(channel);
  try {
    auto r = integrate(level, 0.0, level.kz_limit(), cfg.rel_tol, abs_tol, cfg.max_subdivisions);
    r.value *= 2.0;
    r.error *= 2.0;
    return r;
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(std::string(e.what()) + " (daughter level " + std::to_string(n) + ")",
                           2.0 * pref * e.partial_result(), 2.0 * pref * e.error_estimate(), n);
  }
}

void check_rate_inputs(const DecayChannel& channel, const MagnetizedState& state,
                       const QuadratureConfig& cfg) {
  channel.validate();
  require_massless_neutral(channel);
  state.validate();
  cfg.validate();
}

double lll_x_max(const DecayChannel& channel, double eB) {
  const double M2 = channel.parent_mass * channel.parent_mass;
  return M2 / (2.0 * std::sqrt(M2 + eB));
}

void check_lll_inputs(const DecayChannel& channel, double eB, const QuadratureConfig& cfg) {
  channel.validate();
  require_massless_neutral(channel);
  cfg.validate();
  if (channel.charged_mass != 0.0) {
    throw DomainError("lowest-Landau-level formula requires a massless charged daughter");
  }
  const double M2 = channel.parent_mass * channel.parent_mass;
  if (!(eB > 0.5 * M2) || !std::isfinite(eB)) {
    throw DomainError("lowest-Landau-level formula requires eB > M^2/2");
  }
}

}  // namespace

double level_integrand(const DecayChannel& channel, const MagnetizedState& state, unsigned n,
                       double kz) {
  check_rate_inputs(channel, state, QuadratureConfig{});
  return LevelKinematics(channel, state, n)(kz);
}

LevelRate level_contribution(const DecayChannel& channel, const MagnetizedState& state,
                             unsigned n, const QuadratureConfig& cfg) {
  check_rate_inputs(channel, state, cfg);
  const double pref = prefactor(channel, parent_energy(channel, state));
  const auto r = level_integral(channel, state, n, cfg);
  return {pref * r.value, pref * r.error};
}

RateResult decay_rate(const DecayChannel& channel, const MagnetizedState& state,
                      const QuadratureConfig& cfg, unsigned threads) {
  check_rate_inputs(channel, state, cfg);
  const auto top = n_max(channel, state);
  const double omega_parent = parent_energy(channel, state);
  const double pref = prefactor(channel, omega_parent);

  RateResult result;
  result.lorentz_gamma = omega_parent / channel.parent_mass;
  result.gamma_free_boosted = free_rate_boosted(channel, result.lorentz_gamma);
  if (!top) return result;
  result.n_max_used = *top;

  const unsigned count = *top + 1;
  std::vector<QuadratureResult> integrals(count);
  std::vector<std::exception_ptr> failures(count);
  auto work = [&](unsigned n) {
    try {
      integrals[n] = level_integral(channel, state, n, cfg);
    } catch (...) {
      failures[n] = std::current_exception();
    }
  };

  const unsigned workers = std::clamp(threads, 1u, count);
  if (workers == 1) {
    for (unsigned n = 0; n < count; ++n) work(n);
  } else {
    std::atomic<unsigned> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (unsigned n = next++; n < count; n = next++) work(n);
      });
    }
  }
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  CompensatedSum total;
  CompensatedSum dimensionless;
  CompensatedSum error;
  result.level_contributions.reserve(count);
  for (unsigned n = 0; n < count; ++n) {
    const double gamma_n = pref * integrals[n].value;
    const double error_n = pref * integrals[n].error;
    result.level_contributions.push_back({n, gamma_n, error_n});
    total += gamma_n;
    dimensionless += integrals[n].value;
    error += error_n;
  }
  result.gamma_total = total.value();
  result.error_total = error.value();
  // gamma * Gamma / Gamma'_0 with the G^2/(16 pi) factors cancelled by hand,
  // so the ratio is bit-identical for any coupling.
  result.ratio = dimensionless.value() / threshold_factor(channel);
  return result;
}

double free_rate_rest(const DecayChannel& channel) {
  channel.validate();
  return channel.coupling * channel.coupling / (16.0 * std::numbers::pi * channel.parent_mass) *
         threshold_factor(channel);
}

double free_rate_boosted(const DecayChannel& channel, double lorentz_gamma) {
  if (!(lorentz_gamma >= 1.0)) throw DomainError("free_rate_boosted: gamma must be >= 1");
  return free_rate_rest(channel) / lorentz_gamma;
}

double lifetime(double rate) {
  if (!(rate > 0.0)) throw DomainError("lifetime: rate must be positive");
  return 1.0 / rate;
}

double lll_rate_exact(const DecayChannel& channel, double eB, const QuadratureConfig& cfg) {
  check_lll_inputs(channel, eB, cfg);
  const double M2 = channel.parent_mass * channel.parent_mass;
  const double s = std::sqrt(1.0 + M2 / eB);
  const double shift = 1.0 + M2 / (2.0 * eB);
  const double root_eB = std::sqrt(eB);
  auto integrand = [&](double k) {
    const double t = std::sqrt(1.0 + k * k / eB);
    return std::exp(s * t - shift) / (root_eB * t);
  };
  const auto r = integrate(integrand, 0.0, lll_x_max(channel, eB), cfg);
  return 2.0 * r.value;
}

double lll_rate_paper(const DecayChannel& channel, double eB, const QuadratureConfig& cfg) {
  check_lll_inputs(channel, eB, cfg);
  const double M2 = channel.parent_mass * channel.parent_mass;
  const double s = std::sqrt(1.0 + M2 / eB);
  const double shift = 1.0 + M2 / (2.0 * eB);
  auto integrand = [&](double k) {
    const double t = std::sqrt(1.0 + k * k / eB);
    return std::exp(t) / t;
  };
  const auto r = integrate(integrand, 0.0, lll_x_max(channel, eB), cfg);
  return 2.0 * std::exp(-shift) * std::exp(-s) / std::sqrt(eB) * r.value;
}

}  // namespace magclock

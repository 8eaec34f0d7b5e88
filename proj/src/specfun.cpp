#include "magclock/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "magclock/errors.hpp"

namespace magclock {

namespace {

constexpr double kRescaleThreshold = 1e150;
const double kLogRescale = std::log(kRescaleThreshold);

}  // namespace

double hermite(unsigned n, double rho) {
  if (n > kHermiteMaxDegree) {
    throw RangeError("hermite: degree " + std::to_string(n) + " exceeds cap " +
                     std::to_string(kHermiteMaxDegree));
  }
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * rho;
  for (unsigned k = 1; k < n; ++k) {
    const double next = 2.0 * rho * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

SignedLog hermite_log(unsigned n, double rho) {
  double prev = 0.0;
  double cur = 1.0;
  double log_scale = 0.0;
  for (unsigned k = 0; k < n; ++k) {
    const double next = 2.0 * rho * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleThreshold) {
      cur /= kRescaleThreshold;
      prev /= kRescaleThreshold;
      log_scale += kLogRescale;
    }
  }
  if (cur == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
  return {std::log(std::abs(cur)) + log_scale, cur > 0.0 ? 1 : -1};
}

double laguerre_assoc(unsigned k, unsigned d, double x) {
  if (!(x >= 0.0)) throw DomainError("laguerre_assoc: argument must be non-negative");
  if (k > kLaguerreMaxDegree || d > kLaguerreMaxDegree) {
    throw RangeError("laguerre_assoc: degree or order exceeds cap " +
                     std::to_string(kLaguerreMaxDegree));
  }
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + d - x;
  for (unsigned j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + d - x) * cur - (j + d) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_factorial_ratio(unsigned n, unsigned m) {
  if (n == m) return 0.0;
  const unsigned lo = std::min(n, m);
  const unsigned hi = std::max(n, m);
  return std::lgamma(lo + 1.0) - std::lgamma(hi + 1.0);
}

OverlapWeight overlap_weight(unsigned n, unsigned m, double x) {
  if (!(x >= 0.0)) throw DomainError("overlap_weight: argument must be non-negative");
  if (n > kOverlapMaxIndex || m > kOverlapMaxIndex) {
    throw RangeError("overlap_weight: index exceeds cap " + std::to_string(kOverlapMaxIndex));
  }
  if (x > kOverlapMaxArgument) {
    throw RangeError("overlap_weight: argument exceeds cap");
  }
  const unsigned k_max = std::min(n, m);
  const unsigned d = std::max(n, m) - k_max;
  if (x == 0.0) return {d == 0 ? 1.0 : 0.0};

  // phi_0^d = x^{d/2} e^{-x/2} / sqrt(d!), carried as a log scale while the
  // recurrence runs on a rescaled value.
  double log_scale = 0.5 * (d * std::log(x) - x - std::lgamma(d + 1.0));
  double prev = 0.0;
  double cur = 1.0;
  for (unsigned k = 0; k < k_max; ++k) {
    const double a = (2.0 * k + 1.0 + d - x) / std::sqrt((k + 1.0) * (k + 1.0 + d));
    const double b = std::sqrt((static_cast<double>(k) * (k + d)) / ((k + 1.0) * (k + 1.0 + d)));
    const double next = a * cur - b * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescaleThreshold) {
      cur /= kRescaleThreshold;
      prev /= kRescaleThreshold;
      log_scale += kLogRescale;
    }
  }
  if (cur == 0.0) return {0.0};
  const double w = std::exp(2.0 * (std::log(std::abs(cur)) + log_scale));
  return {std::min(w, 1.0)};
}

}  // namespace magclock

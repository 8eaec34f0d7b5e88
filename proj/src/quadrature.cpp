#include "magclock/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "magclock/errors.hpp"
#include "magclock/summation.hpp"

namespace magclock {

namespace {

// Abscissae and weights of the 10/21-point Gauss-Kronrod pair (QUADPACK dqk21).
constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7, 9.
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.a > rhs.a;  // deterministic tie-break
  }
};

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("quadrature rel_tol must be positive");
  if (abs_tol && !(*abs_tol >= 0.0)) throw DomainError("quadrature abs_tol must be non-negative");
  if (max_subdivisions == 0) throw DomainError("quadrature max_subdivisions must be positive");
}

KronrodPanel gauss_kronrod_21(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 10> f_lo{};
  std::array<double, 10> f_hi{};
  const double f_center = f(center);
  double res_k = f_center * kKronrodWeights[10];
  double res_g = 0.0;
  double res_abs = std::abs(res_k);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kNodes[j];
    f_lo[j] = f(center - dx);
    f_hi[j] = f(center + dx);
    const double pair = f_lo[j] + f_hi[j];
    res_k += kKronrodWeights[j] * pair;
    res_abs += kKronrodWeights[j] * (std::abs(f_lo[j]) + std::abs(f_hi[j]));
    if (j % 2 == 1) res_g += kGaussWeights[j / 2] * pair;
  }

  const double mean = 0.5 * res_k;
  double res_asc = kKronrodWeights[10] * std::abs(f_center - mean);
  for (std::size_t j = 0; j < 10; ++j) {
    res_asc += kKronrodWeights[j] * (std::abs(f_lo[j] - mean) + std::abs(f_hi[j] - mean));
  }

  const double scale = std::abs(half);
  double error = std::abs((res_k - res_g) * half);
  res_abs *= scale;
  res_asc *= scale;
  if (res_asc != 0.0 && error != 0.0) {
    error = res_asc * std::min(1.0, std::pow(200.0 * error / res_asc, 1.5));
  }
  if (res_abs > kTiny / (50.0 * kEps)) {
    error = std::max(50.0 * kEps * res_abs, error);
  }
  return {res_k * half, error, res_abs};
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol, double abs_tol, std::size_t max_subdivisions) {
  QuadratureConfig{rel_tol, abs_tol, max_subdivisions}.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integration limits must be finite");
  if (a == b) return {};
  if (a > b) {
    auto flipped = integrate(f, b, a, rel_tol, abs_tol, max_subdivisions);
    flipped.value = -flipped.value;
    return flipped;
  }

  std::priority_queue<Panel, std::vector<Panel>, ByError> panels;
  const auto first = gauss_kronrod_21(f, a, b);
  panels.push({a, b, first.value, first.error});
  double total = first.value;
  double total_error = first.error;
  std::size_t evaluations = 21;

  auto tolerance = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };

  while (total_error > tolerance()) {
    if (panels.size() >= max_subdivisions) {
      throw ConvergenceError("adaptive quadrature did not converge within " +
                                 std::to_string(max_subdivisions) + " subdivisions",
                             total, total_error);
    }
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw ConvergenceError("adaptive quadrature hit the floating-point resolution limit", total,
                             total_error);
    }
    panels.pop();
    const auto left = gauss_kronrod_21(f, worst.a, mid);
    const auto right = gauss_kronrod_21(f, mid, worst.b);
    evaluations += 42;
    panels.push({worst.a, mid, left.value, left.error});
    panels.push({mid, worst.b, right.value, right.error});
    total += (left.value + right.value) - worst.value;
    total_error += (left.error + right.error) - worst.error;
  }

  // Re-sum in interval order so the answer does not depend on the running
  // updates above.
  std::vector<Panel> ordered;
  ordered.reserve(panels.size());
  while (!panels.empty()) {
    ordered.push_back(panels.top());
    panels.pop();
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const Panel& lhs, const Panel& rhs) { return lhs.a < rhs.a; });
  CompensatedSum value;
  CompensatedSum error;
  for (const auto& p : ordered) {
    value += p.value;
    error += p.error;
  }
  return {value.value(), error.value(), ordered.size(), evaluations};
}

}  // namespace magclock

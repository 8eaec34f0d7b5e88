#ifndef MAGCLOCK_SUMMATION_HPP
#define MAGCLOCK_SUMMATION_HPP

#include <cmath>

namespace magclock {

/// Neumaier's variant of Kahan summation. Order of add() calls matters for
/// bit-reproducibility, so callers feed terms in a fixed order.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double term) noexcept {
    add(term);
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace magclock

#endif  // MAGCLOCK_SUMMATION_HPP

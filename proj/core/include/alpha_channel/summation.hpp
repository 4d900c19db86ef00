#pragma once

#include <cmath>

namespace alpha_channel {

/// Neumaier's variant of Kahan summation. The running compensation keeps the
/// error of a long series at a few ulps of the result instead of growing with
/// the term count.
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  explicit constexpr CompensatedSum(double initial) : sum_(initial) {}

  constexpr void add(double term) {
    const double t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }

  constexpr CompensatedSum& operator+=(double term) {
    add(term);
    return *this;
  }

  [[nodiscard]] constexpr double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace alpha_channel

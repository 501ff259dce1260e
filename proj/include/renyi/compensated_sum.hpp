#pragma once

#include <cmath>
#include <span>

namespace renyi {

// Neumaier's variant of Kahan summation: the running error term also
// captures the case where the incoming term is larger than the partial sum.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double initial) : sum_(initial) {}

  CompensatedSum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      err_ += (sum_ - t) + x;
    } else {
      err_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  CompensatedSum& operator-=(double x) { return *this += -x; }

  double value() const { return sum_ + err_; }

 private:
  double sum_ = 0.0;
  double err_ = 0.0;
};

inline double compensated_sum(std::span<const double> terms) {
  CompensatedSum acc;
  for (double t : terms) acc += t;
  return acc.value();
}

}  // namespace renyi

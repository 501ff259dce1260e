#pragma once

#include <cmath>

#include "renyi/error.hpp"

namespace renyi {

inline constexpr double kDefaultEqTol = 1e-12;

/// Order of a Renyi quantity. Strictly positive; `is_one` marks the Shannon
/// branch and is decided once, at construction.
class Alpha {
 public:
  explicit Alpha(double value, double eq_tol = kDefaultEqTol)
      : value_(value), is_one_(std::fabs(value - 1.0) <= eq_tol) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorKind::InvalidRange, "alpha must be a finite positive number");
    }
  }

  double value() const { return value_; }
  bool is_one() const { return is_one_; }
  /// alpha - 1; the natural small parameter near the Shannon point.
  double delta() const { return value_ - 1.0; }

 private:
  double value_;
  bool is_one_;
};

}  // namespace renyi

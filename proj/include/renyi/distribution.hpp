#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "renyi/compensated_sum.hpp"
#include "renyi/error.hpp"
#include "renyi/tolerance.hpp"

namespace renyi {

/// A validated probability vector over a finite alphabet.
///
/// Zero entries are kept in place so that coordinates of perturbations line
/// up with the original vector; the support is a derived index set. An entry
/// is zero iff it compares equal to 0.0.
class Distribution {
 public:
  std::span<const double> probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::size_t size() const { return probs_.size(); }

  std::span<const std::size_t> support() const { return support_; }
  std::size_t zero_count() const { return probs_.size() - support_.size(); }
  bool full_support() const { return support_.size() == probs_.size(); }

  double max_prob() const { return *std::max_element(probs_.begin(), probs_.end()); }

  double min_support_prob() const {
    double m = 1.0;
    for (std::size_t i : support_) m = std::min(m, probs_[i]);
    return m;
  }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  friend Distribution make_distribution(std::span<const double>, const TolerancePolicy&);
  std::vector<double> probs_;
  std::vector<std::size_t> support_;
};

namespace detail {

// Divides by the compensated sum, then pushes the leftover rounding onto the
// largest entry until the compensated sum of the stored vector is exactly 1.
// A vector that already sums to 1 is returned untouched, which makes
// construction idempotent.
inline void renormalize(std::vector<double>& p) {
  const double total = compensated_sum(p);
  if (total == 1.0) return;
  for (double& x : p) x /= total;
  const auto largest = std::max_element(p.begin(), p.end());
  for (int pass = 0; pass < 4; ++pass) {
    const double residual = 1.0 - compensated_sum(p);
    if (residual == 0.0) break;
    *largest += residual;
  }
}

}  // namespace detail

/// Validates and renormalizes a probability vector.
inline Distribution make_distribution(std::span<const double> values,
                                      const TolerancePolicy& policy = {}) {
  if (values.empty()) throw Error(ErrorKind::EmptyInput, "distribution has no entries");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorKind::NegativeEntry, "entry " + std::to_string(i) + " is not finite");
    }
    if (values[i] < 0.0) {
      throw Error(ErrorKind::NegativeEntry, "entry " + std::to_string(i) + " is negative");
    }
  }
  const double total = compensated_sum(values);
  if (std::fabs(total - 1.0) > policy.sum_tol) {
    throw Error(ErrorKind::SumOutOfTolerance,
                "entries sum to " + std::to_string(total) + ", expected 1");
  }
  Distribution d;
  d.probs_.assign(values.begin(), values.end());
  detail::renormalize(d.probs_);
  for (std::size_t i = 0; i < d.probs_.size(); ++i) {
    if (d.probs_[i] > 0.0) d.support_.push_back(i);
  }
  return d;
}

inline Distribution make_distribution(std::initializer_list<double> values,
                                      const TolerancePolicy& policy = {}) {
  return make_distribution(std::span<const double>(values.begin(), values.size()), policy);
}

inline Distribution uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidRange, "uniform distribution needs n >= 1");
  const std::vector<double> p(n, 1.0 / static_cast<double>(n));
  TolerancePolicy loose;
  loose.sum_tol = 1e-9;
  return make_distribution(p, loose);
}

inline std::size_t support_size(const Distribution& d) { return d.support().size(); }

}  // namespace renyi

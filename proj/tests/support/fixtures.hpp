#pragma once

// Perturbation fixtures, one per asymptotic regime. Terminal ratios (at
// eps = 1e-6) and fitted slopes were computed beforehand at 60 digits and are
// frozen here; see tests/oracle/rates.py.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "renyi/distribution.hpp"
#include "renyi/robustness.hpp"

namespace fixtures {

/// Support coefficients on three points with sum -zero_part and
/// sum c p^(alpha-1) = 0 (third coefficient 1 before scaling).
inline std::vector<double> null_space(const std::vector<double>& p, double alpha, double zero_part) {
  const double w0 = std::pow(p[0], alpha - 1.0), w1 = std::pow(p[1], alpha - 1.0), w2 = std::pow(p[2], alpha - 1.0);
  const double b1 = -zero_part - 1.0, b2 = -w2;
  const double det = w1 - w0;
  return {(b1 * w1 - b2) / det, (b2 - b1 * w0) / det, 1.0};
}

/// [zero coefficients..., support coefficients...] scaled into the unit box.
inline std::vector<double> scaled(std::vector<double> c) {
  double m = 0.0;
  for (double x : c) m = std::max(m, std::fabs(x));
  for (double& x : c) x /= m;
  return c;
}

/// (alpha/2) sum c^2 p^(alpha-2) / sum p^alpha over the support.
inline double quadratic_constant(const std::vector<double>& p, const std::vector<double>& c, double alpha) {
  double q = 0.0, s = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    q += c[k] * c[k] * std::pow(p[k], alpha - 2.0);
    s += std::pow(p[k], alpha);
  }
  return 0.5 * alpha * q / s;
}

struct RateCase {
  std::string case_id;
  std::vector<double> p;
  std::vector<double> c;
  double alpha;
  double constant;        // closed form, as classify should report it
  double terminal_ratio;  // Delta H / rho at eps = 1e-6 (oracle)
  double slope;           // fitted exponent over eps = 1e-3..1e-6 (oracle)
  double exponent;        // of rho
};

inline std::vector<RateCase> rate_cases() {
  const std::vector<double> three = {0.2, 0.3, 0.5};
  std::vector<double> g2 = null_space(three, 1.25, 0.5);
  g2.insert(g2.begin(), 0.5);
  const std::vector<double> l3 = scaled(null_space(three, 0.5, 0.0));
  const std::vector<double> g3 = scaled(null_space(three, 1.5, 0.0));
  return {
      {"A1.i", {0.0, 0.3, 0.7}, {1.0, -1.0, 0.0}, 1.0, 1.0, 0.985236, 0.99757, 1.0},
      {"A1.ii", {0.25, 0.75}, {1.0, -1.0}, 1.0, std::log(1.0 / 3.0), -1.0986096, 0.99967, 1.0},
      {"A1.iii", {0.5, 0.5}, {1.0, -1.0}, 1.0, 2.0, 2.0, 2.0000001, 2.0},
      {"L1.i", {0.0, 0.5, 0.5}, {1.0, -1.0, 0.0}, 0.5, -std::sqrt(2.0), -1.4127145, 0.49546, 0.5},
      {"L1.ii", {0.25, 0.75}, {1.0, -1.0}, 0.5, -(2.0 - 1.0 / std::sqrt(0.75)) / (0.5 + std::sqrt(0.75)), -0.6188003, 0.99960, 1.0},
      {"L1.iii", three, l3, 0.5, quadratic_constant(three, l3, 0.5), 1.4092065, 2.0000882, 2.0},
      {"G1.i", {0.25, 0.75}, {1.0, -1.0}, 3.0, 1.5 * (0.25 - 0.75) / (0.25 * 0.25 * 0.25 + 0.75 * 0.75 * 0.75),
       -1.7142852, 0.99996, 1.0},
      {"G1.ii", {0.0, 0.2, 0.3, 0.5}, scaled(g2), 1.25, 0.411929208701, 0.41204016, 1.2563668, 1.25},
      {"G1.iii", three, g3, 1.5, quadratic_constant(three, g3, 1.5), 3.5544710, 2.0000259, 2.0},
      {"G1.iv", {0.5, 0.5}, {1.0, -1.0}, 2.0, 4.0, 4.0, 2.0, 2.0},
      {"G1.v", {0.5, 0.25, 0.25}, {0.0, 1.0, -1.0}, 3.0, 4.8, 4.8, 2.0, 2.0},
  };
}

}  // namespace fixtures

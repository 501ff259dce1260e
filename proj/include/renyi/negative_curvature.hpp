#pragma once

// Two-level distributions with a negative second derivative of H at alpha = 0.
//
// k entries equal p0 = x/N and N-k entries equal q0 = y/N, where 0 < x < 1 < y
// solve y - log y = x - log x. Normalization forces k/N = r(x) = (y-1)/(y-x),
// and r sweeps the open interval (1/2, 1) as x runs over (0, 1).

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "renyi/bisection.hpp"
#include "renyi/distribution.hpp"
#include "renyi/tolerance.hpp"

namespace renyi {

struct ImplicitPoint {
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
};

struct TwoLevelDistribution {
  std::size_t n = 0;
  std::size_t k = 0;
  double p0 = 0.0;  // the k low entries
  double q0 = 0.0;  // the n - k high entries
};

struct TwoLevelConstruction {
  TwoLevelDistribution levels;
  ImplicitPoint point;
  Distribution expanded;
  double sum_residual = 0.0;  // k p0 + (n-k) q0 - 1
  double log_residual = 0.0;  // p0 - q0 - (log p0 - log q0)/n
};

struct RatioSearch {
  double x_min = 1e-6;
  double x_max = 1.0 - 1e-6;
  std::size_t grid_points = 4096;
};

namespace detail {

inline void require_unit_open(double x) {
  if (!(x > 0.0 && x < 1.0)) throw Error(ErrorKind::InvalidRange, "x must lie in (0, 1)");
}

// (y - x) - log(y / x): zero on the curve, increasing in y for y > 1.
inline double implicit_residual(double x, double y) {
  const double gap = y - x;
  return gap - std::log1p(gap / x);
}

}  // namespace detail

/// The y > 1 with y - log y = x - log x. Bisection runs until the bracket
/// cannot shrink, which is tighter than policy.root_tol.
inline double y_of_x(double x, const TolerancePolicy& policy = {}) {
  detail::require_unit_open(x);
  policy.validate();
  double hi = 2.0;
  while (detail::implicit_residual(x, hi) <= 0.0) hi *= 2.0;
  const auto g = [x](double y) { return detail::implicit_residual(x, y); };
  return bisect(g, 1.0, hi, 0.0);
}

inline double r_of_x(double x, const TolerancePolicy& policy = {}) {
  const double y = y_of_x(x, policy);
  return (y - 1.0) / (y - x);
}

inline ImplicitPoint implicit_point(double x, const TolerancePolicy& policy = {}) {
  const double y = y_of_x(x, policy);
  return {x, y, (y - 1.0) / (y - x)};
}

namespace detail {

inline void check_ratio(std::size_t k, std::size_t n) {
  if (n == 0 || k == 0 || k >= n || 2 * k <= n) {
    throw Error(ErrorKind::RatioOutOfRange,
                "k/n = " + std::to_string(k) + "/" + std::to_string(n) + " is outside (1/2, 1)");
  }
}

}  // namespace detail

/// An x with r(x) = k/n. Scans a log-spaced x grid and refines the first sign
/// change; r is not assumed monotone, so other solutions may exist.
inline ImplicitPoint solve_for_ratio(std::size_t k, std::size_t n, const TolerancePolicy& policy = {},
                                     const RatioSearch& search = {}) {
  detail::check_ratio(k, n);
  policy.validate();
  if (!(search.x_min > 0.0) || !(search.x_min < search.x_max) || !(search.x_max < 1.0) ||
      search.grid_points < 2) {
    throw Error(ErrorKind::InvalidRange, "ratio search grid must satisfy 0 < x_min < x_max < 1");
  }
  const double target = static_cast<double>(k) / static_cast<double>(n);
  const auto gap = [&](double x) { return r_of_x(x, policy) - target; };
  const std::vector<double> grid = log_grid(search.x_min, search.x_max, search.grid_points);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = gap(grid[i]);
  const auto cells = sign_change_cells(grid, values);
  if (cells.empty()) {
    throw Error(ErrorKind::BracketNotFound,
                "r(x) - " + std::to_string(target) + " does not change sign on the scan grid");
  }
  const double x = bisect(gap, cells.front().first, cells.front().second, 0.0);
  const ImplicitPoint pt = implicit_point(x, policy);
  if (!(std::fabs(pt.r - target) <= policy.root_tol)) {
    throw Error(ErrorKind::BracketNotFound, "bisection did not reach root_tol");
  }
  return pt;
}

/// Builds the two-level distribution for k low entries out of n and checks
/// both defining equations before returning.
inline TwoLevelConstruction build_two_level(std::size_t k, std::size_t n,
                                            const TolerancePolicy& policy = {},
                                            const RatioSearch& search = {}) {
  const ImplicitPoint pt = solve_for_ratio(k, n, policy, search);
  const double nn = static_cast<double>(n);
  TwoLevelDistribution t{n, k, pt.x / nn, pt.y / nn};

  CompensatedSum total;
  total += static_cast<double>(k) * t.p0;
  total += static_cast<double>(n - k) * t.q0;
  total -= 1.0;
  const double sum_residual = total.value();
  const double log_residual = (t.p0 - t.q0) - (std::log(t.p0) - std::log(t.q0)) / nn;
  const bool ordered = 0.0 < t.p0 && t.p0 < 1.0 / nn && 1.0 / nn < t.q0 && t.q0 < 1.0;
  if (!ordered || !(std::fabs(sum_residual) <= 1e-12) || !(std::fabs(log_residual) <= 1e-10)) {
    throw Error(ErrorKind::CertificateViolation,
                "two-level system residuals " + std::to_string(sum_residual) + ", " +
                    std::to_string(log_residual));
  }
  std::vector<double> p(n, t.q0);
  std::fill(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k), t.p0);
  return {t, pt, make_distribution(p, policy), sum_residual, log_residual};
}

/// log u - u + 1 with u = N^2 p0 q0; negative unless u = 1.
inline double curvature_certificate(double product) {
  const double v = product - 1.0;
  // log1p only helps near u = 1; for tiny u, u - 1 rounds to -1
  if (product < 0.5) return std::log(product) - v;
  return std::log1p(v) - v;
}

inline double curvature_certificate(const TwoLevelDistribution& t) {
  const double nn = static_cast<double>(t.n);
  return curvature_certificate((nn * t.p0) * (nn * t.q0));
}

}  // namespace renyi

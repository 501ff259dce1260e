#pragma once

#include <cmath>
#include <utility>
#include <vector>

namespace renyi {

/// Bisection on [lo, hi] where fn(lo) and fn(hi) have opposite signs (or one is
/// zero). Stops when the bracket is no wider than `width` or cannot shrink
/// further in floating point.
template <class Fn>
double bisect(Fn&& fn, double lo, double hi, double width) {
  double flo = fn(lo);
  if (flo == 0.0) return lo;
  if (fn(hi) == 0.0) return hi;
  for (int it = 0; it < 2000 && hi - lo > width; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

/// n points log-spaced from lo to hi inclusive (lo > 0, n >= 2).
inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

/// Adjacent grid cells [g[i], g[i+1]] over which `values` changes sign. A grid
/// value that is exactly zero is reported as a degenerate cell [g[i], g[i]].
inline std::vector<std::pair<double, double>> sign_change_cells(const std::vector<double>& grid,
                                                                const std::vector<double>& values) {
  std::vector<std::pair<double, double>> cells;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      cells.emplace_back(grid[i], grid[i]);
      continue;
    }
    if (i + 1 < grid.size() && values[i + 1] != 0.0 && (values[i] < 0.0) != (values[i + 1] < 0.0)) {
      cells.emplace_back(grid[i], grid[i + 1]);
    }
  }
  return cells;
}

}  // namespace renyi

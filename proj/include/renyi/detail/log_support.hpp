#pragma once

// Shared log-domain kernel. Every alpha-dependent quantity in the library is
// assembled from the log-probabilities of the support and from
//   f(alpha) = log sum_k p_k^alpha
// evaluated without the cancellations that the textbook formulas suffer near
// alpha = 1 or for extreme alpha.

#include <algorithm>
#include <cmath>
#include <vector>

#include "renyi/compensated_sum.hpp"
#include "renyi/distribution.hpp"

namespace renyi::detail {

struct LogSupport {
  std::vector<double> p;     // support probabilities
  std::vector<double> logp;  // their natural logs (all <= 0)
  double max_abs_log = 0.0;

  LogSupport() = default;

  explicit LogSupport(const Distribution& d) {
    p.reserve(d.support().size());
    logp.reserve(d.support().size());
    for (std::size_t i : d.support()) {
      p.push_back(d[i]);
      logp.push_back(std::log(d[i]));
      max_abs_log = std::max(max_abs_log, -logp.back());
    }
  }

  std::size_t size() const { return p.size(); }

  /// True when all support probabilities coincide (H_alpha is then constant).
  bool flat(double spread_tol = 1e-12) const {
    const auto [lo, hi] = std::minmax_element(logp.begin(), logp.end());
    return *hi - *lo <= spread_tol;
  }
};

/// log sum_k p_k^alpha.
///
/// For |alpha-1| * max|log p| <= 1 the sum is written as
/// 1 + sum_k p_k expm1((alpha-1) log p_k), which is exact to working precision
/// as alpha -> 1 (the result is O(alpha-1)). Otherwise a max-shifted
/// exponential sum is used so that extreme alpha neither overflows nor
/// underflows.
inline double log_power_sum(const LogSupport& s, double alpha) {
  const double delta = alpha - 1.0;
  if (std::fabs(delta) * s.max_abs_log <= 1.0) {
    CompensatedSum acc;
    for (std::size_t k = 0; k < s.size(); ++k) acc += s.p[k] * std::expm1(delta * s.logp[k]);
    return std::log1p(acc.value());
  }
  double shift = -HUGE_VAL;
  for (double l : s.logp) shift = std::max(shift, alpha * l);
  CompensatedSum acc;
  for (double l : s.logp) acc += std::exp(alpha * l - shift);
  return shift + std::log(acc.value());
}

/// u e^u - expm1(u) = r log r - r + 1 with r = e^u; nonnegative, O(u^2).
inline double kl_kernel(double u) {
  if (std::fabs(u) < 0.5) {
    // sum_{j>=2} (j-1) u^j / j!
    double power = u * u / 2.0;  // u^j / j!
    double sum = 0.0;
    for (int j = 2; j < 40; ++j) {
      const double term = (j - 1) * power;
      sum += term;
      if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
      power *= u / (j + 1);
    }
    return sum;
  }
  if (u < -700.0) return 1.0;
  return u * std::exp(u) - std::expm1(u);
}

/// Escort distribution q_k = p_k^alpha / sum p^alpha and the quantities built
/// on it. `u_k = log(q_k / p_k)`.
struct EscortState {
  double alpha = 1.0;
  double f = 0.0;      // log sum p^alpha
  double mean = 0.0;   // E_q[log p]            = f'(alpha)
  double var = 0.0;    // Var_q[log p]          = f''(alpha)
  double third = 0.0;  // third central moment  = f'''(alpha)
  double kl = 0.0;     // KL(q || p) = sum q log(q/p)
  std::vector<double> q;
  std::vector<double> u;
};

inline EscortState escort_state(const LogSupport& s, double alpha) {
  EscortState e;
  e.alpha = alpha;
  e.f = log_power_sum(s, alpha);
  const double delta = alpha - 1.0;
  const std::size_t n = s.size();
  e.q.resize(n);
  e.u.resize(n);
  CompensatedSum qsum, mean, kl;
  for (std::size_t k = 0; k < n; ++k) {
    e.u[k] = delta * s.logp[k] - e.f;
    e.q[k] = s.p[k] * std::exp(e.u[k]);
    qsum += e.q[k];
    mean += e.q[k] * s.logp[k];
    kl += s.p[k] * kl_kernel(e.u[k]);
  }
  // q is normalized analytically; dividing by the computed total removes the
  // rounding of exp() from the moments.
  const double total = qsum.value();
  e.mean = mean.value() / total;
  e.kl = kl.value();
  CompensatedSum m2, m3;
  for (std::size_t k = 0; k < n; ++k) {
    const double c = s.logp[k] - e.mean;
    m2 += e.q[k] * c * c;
    m3 += e.q[k] * c * c * c;
  }
  e.var = m2.value() / total;
  e.third = m3.value() / total;
  return e;
}

/// Cumulants kappa_1..kappa_5 of xi = log p_k drawn with probability p_k.
struct Cumulants {
  double k1 = 0.0, k2 = 0.0, k3 = 0.0, k4 = 0.0, k5 = 0.0;
  double m1 = 0.0, m2 = 0.0, m3 = 0.0;  // raw moments E xi, E xi^2, E xi^3
};

inline Cumulants cumulants(const LogSupport& s) {
  Cumulants c;
  CompensatedSum m1, m2, m3;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double l = s.logp[k];
    m1 += s.p[k] * l;
    m2 += s.p[k] * l * l;
    m3 += s.p[k] * l * l * l;
  }
  c.m1 = m1.value();
  c.m2 = m2.value();
  c.m3 = m3.value();
  CompensatedSum c2, c3, c4, c5;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double d = s.logp[k] - c.m1;
    const double d2 = d * d;
    c2 += s.p[k] * d2;
    c3 += s.p[k] * d2 * d;
    c4 += s.p[k] * d2 * d2;
    c5 += s.p[k] * d2 * d2 * d;
  }
  c.k1 = c.m1;
  c.k2 = c2.value();
  c.k3 = c3.value();
  c.k4 = c4.value() - 3.0 * c.k2 * c.k2;
  c.k5 = c5.value() - 10.0 * c.k3 * c.k2;
  return c;
}

}  // namespace renyi::detail

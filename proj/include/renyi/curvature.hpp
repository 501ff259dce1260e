#pragma once

#include <cmath>
#include <vector>

#include "renyi/alpha.hpp"
#include "renyi/bisection.hpp"
#include "renyi/compensated_sum.hpp"
#include "renyi/detail/log_support.hpp"
#include "renyi/distribution.hpp"
#include "renyi/entropy.hpp"
#include "renyi/tolerance.hpp"

namespace renyi {

/// Raw moments of xi = log p_k drawn with probability p_k.
struct CumulantTriple {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
};

struct FDerivatives {
  double f = 0.0, f1 = 0.0, f2 = 0.0, f3 = 0.0;
};

struct CurvatureReport {
  Alpha alpha{1.0};
  double h = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
};

struct EscortWeights {
  std::vector<double> q;
  std::vector<double> qprime;
};

namespace detail {

// Below this |alpha - 1| the derivatives come from the cumulant expansion.
inline constexpr double kTaylorRadius = 1e-4;

inline void require_full_support(const Distribution& d, const char* what) {
  if (!d.full_support()) {
    throw Error(ErrorKind::ZeroProbability, std::string(what) + " needs every p_i > 0");
  }
}

inline double first_derivative(const LogSupport& s, double alpha) {
  if (s.flat()) return 0.0;
  const double delta = alpha - 1.0;
  if (std::fabs(delta) < kTaylorRadius) {
    const Cumulants c = cumulants(s);
    return -(c.k2 / 2.0 + delta * (c.k3 / 3.0 + delta * (c.k4 / 8.0 + delta * c.k5 / 30.0)));
  }
  const EscortState e = escort_state(s, alpha);
  return -e.kl / (delta * delta);
}

inline double second_derivative(const LogSupport& s, double alpha) {
  if (s.flat()) return 0.0;
  const double delta = alpha - 1.0;
  if (std::fabs(delta) < kTaylorRadius) {
    const Cumulants c = cumulants(s);
    return -(c.k3 / 3.0 + delta * (c.k4 / 4.0 + delta * c.k5 / 10.0));
  }
  // -(1/(1-a)^3) sum ((1-a) q'_k + 2 q_k) log(q_k/p_k), with
  // sum q'_k log(q_k/p_k) = (a-1) Var_q and sum q_k log(q_k/p_k) = KL(q||p).
  const EscortState e = escort_state(s, alpha);
  return (2.0 * e.kl - delta * delta * e.var) / (delta * delta * delta);
}

}  // namespace detail

/// f = log S_0 and its first three alpha-derivatives (the escort cumulants).
inline FDerivatives f_derivatives(const Distribution& d, Alpha a) {
  const detail::LogSupport s(d);
  const detail::EscortState e = detail::escort_state(s, a.value());
  return {e.f, e.mean, e.var, e.third};
}

inline CumulantTriple cumulants_at_one(const Distribution& d) {
  const detail::Cumulants c = detail::cumulants(detail::LogSupport(d));
  return {c.m1, c.m2, c.m3};
}

/// f'''(1), the third central moment of xi.
inline double third_cumulant_at_one(const Distribution& d) {
  return detail::cumulants(detail::LogSupport(d)).k3;
}

inline double first_derivative(const Distribution& d, Alpha a) {
  detail::require_full_support(d, "first_derivative");
  return detail::first_derivative(detail::LogSupport(d), a.is_one() ? 1.0 : a.value());
}

inline double second_derivative(const Distribution& d, Alpha a) {
  detail::require_full_support(d, "second_derivative");
  return detail::second_derivative(detail::LogSupport(d), a.is_one() ? 1.0 : a.value());
}

/// H'' written through the slope function of f:
/// (f''(1-a)^2 + 2 f'(1-a) + 2 f) / (1-a)^3. Independent of second_derivative
/// and used to cross-check it; loses accuracy as alpha approaches 1.
inline double second_derivative_slope_form(const Distribution& d, Alpha a) {
  detail::require_full_support(d, "second_derivative_slope_form");
  if (a.is_one()) throw Error(ErrorKind::InvalidRange, "slope form is undefined at alpha = 1");
  const FDerivatives fd = f_derivatives(d, a);
  const double w = 1.0 - a.value();
  return (fd.f2 * w * w + 2.0 * fd.f1 * w + 2.0 * fd.f) / (w * w * w);
}

/// Limit of H'' as alpha -> 0+:
/// 2 log N + (1/N) sum log^2 p - (1/N^2)(sum log p)^2 + (2/N) sum log p.
inline double second_derivative_at_zero(const Distribution& d) {
  detail::require_full_support(d, "second_derivative_at_zero");
  const detail::LogSupport s(d);
  const double n = static_cast<double>(s.size());
  const double mean = compensated_sum(s.logp) / n;
  CompensatedSum var;
  for (double l : s.logp) var += (l - mean) * (l - mean);
  return 2.0 * (std::log(n) + mean) + var.value() / n;
}

inline EscortWeights escort_weights(const Distribution& d, Alpha a) {
  const detail::LogSupport s(d);
  const detail::EscortState e = detail::escort_state(s, a.value());
  EscortWeights w;
  w.q.assign(d.size(), 0.0);
  w.qprime.assign(d.size(), 0.0);
  std::size_t k = 0;
  for (std::size_t i : d.support()) {
    w.q[i] = e.q[k];
    w.qprime[i] = e.q[k] * (s.logp[k] - e.mean);
    ++k;
  }
  return w;
}

inline CurvatureReport curvature_report(const Distribution& d, Alpha a) {
  return {a, renyi_entropy(d, a), first_derivative(d, a), second_derivative(d, a)};
}

struct InflectionSearch {
  double alpha_min = 0.01;
  double alpha_max = 10.0;
  std::size_t grid_points = 2000;
};

/// Sign changes of H'' on a log-spaced alpha grid, each refined by bisection to
/// policy.root_tol. Roots closer together than one grid cell can be missed.
inline std::vector<double> find_inflections(const Distribution& d, const InflectionSearch& search = {},
                                            const TolerancePolicy& policy = {}) {
  detail::require_full_support(d, "find_inflections");
  if (!(search.alpha_min > 0.0) || !(search.alpha_min < search.alpha_max) ||
      !std::isfinite(search.alpha_max)) {
    throw Error(ErrorKind::InvalidRange, "need 0 < alpha_min < alpha_max");
  }
  if (search.grid_points < 2) throw Error(ErrorKind::InvalidRange, "need at least 2 grid points");
  policy.validate();
  const detail::LogSupport s(d);
  if (s.flat()) return {};
  const auto h2 = [&](double alpha) { return detail::second_derivative(s, alpha); };
  const std::vector<double> grid = log_grid(search.alpha_min, search.alpha_max, search.grid_points);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = h2(grid[i]);
  std::vector<double> roots;
  for (const auto& [lo, hi] : sign_change_cells(grid, values)) {
    roots.push_back(lo == hi ? lo : bisect(h2, lo, hi, policy.root_tol));
  }
  return roots;
}

/// beta * log sum p^(1 + 1/beta), which equals -H_{1+1/beta}.
inline double g_beta(const Distribution& d, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorKind::InvalidRange, "beta must be > 0");
  return beta * detail::log_power_sum(detail::LogSupport(d), 1.0 + 1.0 / beta);
}

/// d/dbeta of g_beta: -sum_k w_k log(p_k^(1/beta) / S_0) with w the escort
/// weights at 1 + 1/beta, i.e. minus KL(w || p). Never positive.
inline double g_beta_derivative(const Distribution& d, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw Error(ErrorKind::InvalidRange, "beta must be > 0");
  detail::require_full_support(d, "g_beta_derivative");
  const detail::LogSupport s(d);
  return -detail::escort_state(s, 1.0 + 1.0 / beta).kl;
}

/// H''(0) of (eps, (1-eps)/(n-1), ..., (1-eps)/(n-1)).
inline double h0_spike_family(std::size_t n, double eps) {
  if (n < 2) throw Error(ErrorKind::InvalidRange, "spike family needs n >= 2");
  if (!(eps > 0.0) || eps > 1.0 / static_cast<double>(n)) {
    throw Error(ErrorKind::InvalidRange, "spike family needs 0 < eps <= 1/n");
  }
  std::vector<double> p(n, (1.0 - eps) / static_cast<double>(n - 1));
  p[0] = eps;
  TolerancePolicy loose;
  loose.sum_tol = 1e-9;
  return second_derivative_at_zero(make_distribution(p, loose));
}

}  // namespace renyi

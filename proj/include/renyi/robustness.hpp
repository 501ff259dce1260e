#pragma once

// Linear perturbations p(eps) = p + eps c and the leading-order behaviour of
// Delta H = H_alpha(p) - H_alpha(p(eps)) as eps -> 0.

#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "renyi/alpha.hpp"
#include "renyi/compensated_sum.hpp"
#include "renyi/distribution.hpp"
#include "renyi/tolerance.hpp"

namespace renyi {

enum class CaseId { A1_i, A1_ii, A1_iii, L1_i, L1_ii, L1_iii, G1_i, G1_ii, G1_iii, G1_iv, G1_v };

constexpr const char* to_string(CaseId id) noexcept {
  switch (id) {
    case CaseId::A1_i: return "A1.i";
    case CaseId::A1_ii: return "A1.ii";
    case CaseId::A1_iii: return "A1.iii";
    case CaseId::L1_i: return "L1.i";
    case CaseId::L1_ii: return "L1.ii";
    case CaseId::L1_iii: return "L1.iii";
    case CaseId::G1_i: return "G1.i";
    case CaseId::G1_ii: return "G1.ii";
    case CaseId::G1_iii: return "G1.iii";
    case CaseId::G1_iv: return "G1.iv";
    case CaseId::G1_v: return "G1.v";
  }
  return "?";
}

/// rho(eps) in Delta H ~ C rho(eps).
enum class Rate { EpsLogEps, Eps, EpsSquared, EpsPowAlpha };

constexpr const char* to_string(Rate r) noexcept {
  switch (r) {
    case Rate::EpsLogEps: return "eps*log(eps)";
    case Rate::Eps: return "eps";
    case Rate::EpsSquared: return "eps^2";
    case Rate::EpsPowAlpha: return "eps^alpha";
  }
  return "?";
}

inline double rate_value(Rate r, double eps, double alpha) {
  switch (r) {
    case Rate::EpsLogEps: return eps * std::log(eps);
    case Rate::Eps: return eps;
    case Rate::EpsSquared: return eps * eps;
    case Rate::EpsPowAlpha: return std::pow(eps, alpha);
  }
  return 0.0;
}

/// Coefficient vector c. Valid for a distribution d when it has d's length,
/// sums to zero, is not identically zero, has c_k in [0, 1] where p_k = 0 and
/// |c_k| <= 1 elsewhere.
struct PerturbationSpec {
  std::vector<double> c;
};

inline void validate_spec(const Distribution& d, const PerturbationSpec& spec,
                          const TolerancePolicy& policy = {}) {
  if (spec.c.size() != d.size()) {
    throw Error(ErrorKind::InvalidSpec, "coefficient vector has length " +
                                            std::to_string(spec.c.size()) + ", distribution has " +
                                            std::to_string(d.size()));
  }
  bool nonzero = false;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double c = spec.c[k];
    if (!std::isfinite(c)) throw Error(ErrorKind::InvalidSpec, "coefficient is not finite");
    const bool ok = d[k] == 0.0 ? (c >= 0.0 && c <= 1.0) : std::fabs(c) <= 1.0;
    if (!ok) {
      throw Error(ErrorKind::InvalidSpec, "coefficient " + std::to_string(k) + " is out of its box");
    }
    nonzero = nonzero || c != 0.0;
  }
  if (!nonzero) throw Error(ErrorKind::InvalidSpec, "coefficients are all zero");
  const double total = compensated_sum(spec.c);
  if (!(std::fabs(total) <= policy.eq_tol)) {
    throw Error(ErrorKind::InvalidSpec, "coefficients sum to " + std::to_string(total));
  }
}

struct AsymptoticLaw {
  CaseId case_id = CaseId::A1_i;
  Rate rate = Rate::Eps;
  double exponent = 1.0;  // of rho; eps log eps counts as 1
  double constant = 0.0;
  double alpha = 1.0;
  std::vector<std::string> warnings;  // case-defining sums close to the eq_tol boundary

  double rho(double eps) const { return rate_value(rate, eps, alpha); }
};

struct RateFitReport {
  AsymptoticLaw law;
  std::vector<double> eps_grid;
  std::vector<double> deltas;
  std::vector<double> ratios;
  double fitted_exponent = 0.0;
  double predicted_constant = 0.0;
  double terminal_ratio = 0.0;
};

inline Distribution perturb(const Distribution& d, const PerturbationSpec& spec, double eps,
                            const TolerancePolicy& policy = {}) {
  validate_spec(d, spec, policy);
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidRange, "eps must be > 0");
  if (eps > d.min_support_prob()) {
    throw Error(ErrorKind::EpsilonTooLarge,
                "eps exceeds the smallest nonzero probability " + std::to_string(d.min_support_prob()));
  }
  std::vector<double> p(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) p[k] = std::max(0.0, d[k] + spec.c[k] * eps);
  return make_distribution(p, policy);
}

/// Picks the regime from alpha, the zero pattern of c, and whether
///   Z = sum_{p_k=0} c_k,  L = sum c_k log p_k,  M = sum c_k p_k^(alpha-1)
/// vanish (|.| <= eq_tol). S = sum p^alpha.
inline AsymptoticLaw classify(const Distribution& d, const PerturbationSpec& spec, Alpha a,
                              const TolerancePolicy& policy = {}) {
  validate_spec(d, spec, policy);
  const double alpha = a.value();
  CompensatedSum z, l, m, s, zero_pow, quad, quad_all;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double c = spec.c[k];
    if (d[k] == 0.0) {
      z += c;
      if (c > 0.0) zero_pow += std::pow(c, alpha);
      quad_all += c * c;
      continue;
    }
    const double p = d[k];
    l += c * std::log(p);
    m += c * std::pow(p, alpha - 1.0);
    s += std::pow(p, alpha);
    quad += c * c * std::pow(p, alpha - 2.0);
    quad_all += c * c;
  }

  AsymptoticLaw law;
  law.alpha = alpha;
  const auto vanishes = [&](double v, const char* name) {
    const double av = std::fabs(v);
    if (av > policy.eq_tol && av <= 100.0 * policy.eq_tol) {
      law.warnings.push_back(std::string(name) + " = " + std::to_string(v) +
                             " is within 100*eq_tol of zero");
    }
    return av <= policy.eq_tol;
  };
  const auto set = [&](CaseId id, Rate rate, double constant) {
    law.case_id = id;
    law.rate = rate;
    law.exponent = rate == Rate::EpsSquared ? 2.0 : rate == Rate::EpsPowAlpha ? alpha : 1.0;
    law.constant = constant;
  };

  const bool zero_null = vanishes(z.value(), "zero-part sum");
  const double S = s.value();
  if (a.is_one()) {
    if (!zero_null) {
      set(CaseId::A1_i, Rate::EpsLogEps, z.value());
    } else if (!vanishes(l.value(), "sum c log p")) {
      set(CaseId::A1_ii, Rate::Eps, l.value());
    } else {
      set(CaseId::A1_iii, Rate::EpsSquared, 0.5 * quad.value());
    }
    return law;
  }
  const bool m_null = vanishes(m.value(), "sum c p^(alpha-1)");
  const double linear = alpha / (alpha - 1.0) * m.value() / S;
  const double power = zero_pow.value() / ((alpha - 1.0) * S);
  const double square = 0.5 * alpha * quad.value() / S;
  if (alpha < 1.0) {
    if (!zero_null) {
      set(CaseId::L1_i, Rate::EpsPowAlpha, power);
    } else if (!m_null) {
      set(CaseId::L1_ii, Rate::Eps, linear);
    } else {
      set(CaseId::L1_iii, Rate::EpsSquared, square);
    }
    return law;
  }
  if (!m_null) {
    set(CaseId::G1_i, Rate::Eps, linear);
  } else if (std::fabs(alpha - 2.0) <= policy.eq_tol) {
    set(CaseId::G1_iv, Rate::EpsSquared, quad_all.value() / S);
  } else if (alpha < 2.0) {
    if (!zero_null) {
      set(CaseId::G1_ii, Rate::EpsPowAlpha, power);
    } else {
      set(CaseId::G1_iii, Rate::EpsSquared, square);
    }
  } else {
    set(CaseId::G1_v, Rate::EpsSquared, square);
  }
  return law;
}

namespace detail {

// (1+x) log1p(x) - x, which is O(x^2).
inline double entropy_shift_kernel(double x) {
  if (std::fabs(x) < 0.1) {
    // sum_{j>=2} (-1)^j x^j / (j (j-1))
    double power = x * x;
    double sum = 0.0;
    for (int j = 2; j < 60; ++j) {
      const double term = power / (j * (j - 1.0));
      sum += term;
      if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
      power *= -x;
    }
    return sum;
  }
  return (1.0 + x) * std::log1p(x) - x;
}

}  // namespace detail

/// Delta H = H(p) - H(p + eps c), evaluated without forming the two entropies
/// separately so that differences of order eps^2 keep their relative accuracy.
inline double perturbation_delta(const Distribution& d, const PerturbationSpec& spec, double eps, Alpha a,
                                 const TolerancePolicy& policy = {}) {
  validate_spec(d, spec, policy);
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidRange, "eps must be > 0");
  if (eps > d.min_support_prob()) throw Error(ErrorKind::EpsilonTooLarge, "eps exceeds min support probability");
  if (a.is_one()) {
    // p' log p' - p log p = t log p + t + p psi(t/p) on the support, t log t off it
    CompensatedSum acc;
    for (std::size_t k = 0; k < d.size(); ++k) {
      const double t = spec.c[k] * eps;
      if (t == 0.0) continue;
      if (d[k] == 0.0) {
        acc += t * std::log(t);
        continue;
      }
      const double p = d[k];
      if (t == -p) {  // the coordinate drops out entirely
        acc -= p * std::log(p);
        continue;
      }
      acc += t * std::log(p);
      acc += t;
      acc += p * detail::entropy_shift_kernel(t / p);
    }
    return acc.value();
  }
  // S' - S = sum p^alpha expm1(alpha log1p(t/p)) + sum_{p=0} t^alpha, scaled by
  // the largest p^alpha to stay representable.
  const double alpha = a.value();
  double shift = -HUGE_VAL;
  for (std::size_t i : d.support()) shift = std::max(shift, alpha * std::log(d[i]));
  CompensatedSum s, diff;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double t = spec.c[k] * eps;
    if (d[k] == 0.0) {
      if (t > 0.0) diff += std::exp(alpha * std::log(t) - shift);
      continue;
    }
    const double w = std::exp(alpha * std::log(d[k]) - shift);
    s += w;
    if (t != 0.0) diff += w * std::expm1(alpha * std::log1p(t / d[k]));
  }
  return -std::log1p(diff.value() / s.value()) / (1.0 - alpha);
}

/// Delta H on eps_start * eps_factor^j, j < steps, with ratios against the
/// classified rate and a least-squares exponent of log|Delta H| on log eps
/// (on log|eps log eps| for the eps log eps law).
inline RateFitReport empirical_rate(const Distribution& d, const PerturbationSpec& spec, Alpha a,
                                    double eps_start, double eps_factor, std::size_t steps,
                                    const TolerancePolicy& policy = {}) {
  if (!(eps_start > 0.0)) throw Error(ErrorKind::InvalidRange, "eps_start must be > 0");
  if (eps_start > d.min_support_prob()) {
    throw Error(ErrorKind::EpsilonTooLarge, "eps_start exceeds min support probability");
  }
  if (!(eps_factor > 0.0 && eps_factor < 1.0)) {
    throw Error(ErrorKind::InvalidRange, "eps_factor must lie in (0, 1)");
  }
  if (steps < 3) throw Error(ErrorKind::InvalidRange, "need at least 3 steps");

  RateFitReport rep;
  rep.law = classify(d, spec, a, policy);
  rep.predicted_constant = rep.law.constant;
  double eps = eps_start;
  for (std::size_t j = 0; j < steps; ++j, eps *= eps_factor) {
    const double delta = perturbation_delta(d, spec, eps, a, policy);
    rep.eps_grid.push_back(eps);
    rep.deltas.push_back(delta);
    rep.ratios.push_back(delta / rep.law.rho(eps));
  }
  rep.terminal_ratio = rep.ratios.back();

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(steps);
  for (std::size_t j = 0; j < steps; ++j) {
    const double e = rep.eps_grid[j];
    const double x = rep.law.rate == Rate::EpsLogEps ? std::log(std::fabs(e * std::log(e))) : std::log(e);
    const double y = std::log(std::fabs(rep.deltas[j]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  rep.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

/// Delta H between uniform(N) and its perturbation by eps(N) c(N), for each N.
/// Every c(N) needs at least one strictly positive entry.
inline std::vector<std::pair<std::size_t, double>> uniform_stability_scan(
    const std::function<std::vector<double>(std::size_t)>& c_family,
    const std::function<double(std::size_t)>& eps_rule, Alpha a, std::span<const std::size_t> n_values,
    const TolerancePolicy& policy = {}) {
  std::vector<std::pair<std::size_t, double>> rows;
  for (std::size_t n : n_values) {
    if (n == 0) throw Error(ErrorKind::InvalidSpec, "alphabet size must be >= 1");
    const Distribution u = uniform(n);
    PerturbationSpec spec{c_family(n)};
    validate_spec(u, spec, policy);
    bool positive = false;
    for (double c : spec.c) positive = positive || c > 0.0;
    if (!positive) throw Error(ErrorKind::InvalidSpec, "c(N) needs a strictly positive entry");
    const double eps = eps_rule(n);
    if (!(eps >= 0.0) || eps > u.min_support_prob()) {
      throw Error(ErrorKind::InvalidSpec, "eps(N) must lie in [0, 1/N]");
    }
    rows.emplace_back(n, eps == 0.0 ? 0.0 : perturbation_delta(u, spec, eps, a, policy));
  }
  return rows;
}

}  // namespace renyi

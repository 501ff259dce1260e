#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "renyi/alpha.hpp"
#include "renyi/compensated_sum.hpp"
#include "renyi/detail/log_support.hpp"
#include "renyi/distribution.hpp"

namespace renyi {

/// S_i(alpha) = sum over the support of p^alpha log^i p, i = 0..3.
///
/// Stored as exp(log_scale) * scaled[i] so that large alpha on small
/// probabilities does not underflow; ratios S_i / S_0 never need the scale.
struct PowerSums {
  Alpha alpha{1.0};
  double log_scale = 0.0;
  std::array<double, 4> scaled{};

  double s(int i) const { return std::exp(log_scale) * scaled.at(i); }
  double log_s0() const { return log_scale + std::log(scaled[0]); }
};

inline PowerSums power_sums(const Distribution& d, Alpha a) {
  const detail::LogSupport s(d);
  PowerSums ps;
  ps.alpha = a;
  double shift = -HUGE_VAL;
  for (double l : s.logp) shift = std::max(shift, a.value() * l);
  ps.log_scale = shift;
  std::array<CompensatedSum, 4> acc;
  for (double l : s.logp) {
    const double w = std::exp(a.value() * l - shift);
    acc[0] += w;
    acc[1] += w * l;
    acc[2] += w * l * l;
    acc[3] += w * l * l * l;
  }
  for (int i = 0; i < 4; ++i) ps.scaled[i] = acc[i].value();
  return ps;
}

inline double shannon_entropy(const Distribution& d) {
  CompensatedSum acc;
  for (std::size_t i : d.support()) acc -= d[i] * std::log(d[i]);
  return acc.value();
}

/// Renyi entropy in nats; the Shannon entropy when `a.is_one()`.
inline double renyi_entropy(const Distribution& d, Alpha a) {
  if (a.is_one()) return shannon_entropy(d);
  const detail::LogSupport s(d);
  return detail::log_power_sum(s, a.value()) / (1.0 - a.value());
}

/// H_0 = log of the support size.
inline double entropy_limit_zero(const Distribution& d) {
  return std::log(static_cast<double>(support_size(d)));
}

/// H_inf = -log max p.
inline double entropy_limit_infinity(const Distribution& d) { return -std::log(d.max_prob()); }

/// D_alpha(P || Q). At alpha = 1 this returns the Kullback-Leibler divergence,
/// the continuous extension of the family.
inline double renyi_divergence(const Distribution& p, const Distribution& q, Alpha a) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::DimensionMismatch, "divergence needs distributions of equal length");
  }
  std::vector<double> weight, log_ratio;
  for (std::size_t i : p.support()) {
    if (q[i] == 0.0) {
      throw Error(ErrorKind::SupportMismatch,
                  "p has mass at index " + std::to_string(i) + " where q is zero");
    }
    weight.push_back(p[i]);
    log_ratio.push_back(std::log(p[i]) - std::log(q[i]));
  }
  if (a.is_one()) {
    CompensatedSum acc;
    for (std::size_t k = 0; k < weight.size(); ++k) acc += weight[k] * log_ratio[k];
    return std::max(0.0, acc.value());
  }
  // sum p^a q^(1-a) = sum p exp((a-1) log(p/q))
  const double delta = a.delta();
  double max_abs = 0.0;
  for (double r : log_ratio) max_abs = std::max(max_abs, std::fabs(r));
  double log_sum;
  if (std::fabs(delta) * max_abs <= 1.0) {
    CompensatedSum acc;
    for (std::size_t k = 0; k < weight.size(); ++k) {
      acc += weight[k] * std::expm1(delta * log_ratio[k]);
    }
    log_sum = std::log1p(acc.value());
  } else {
    double shift = -HUGE_VAL;
    for (std::size_t k = 0; k < weight.size(); ++k) {
      shift = std::max(shift, std::log(weight[k]) + delta * log_ratio[k]);
    }
    CompensatedSum acc;
    for (std::size_t k = 0; k < weight.size(); ++k) {
      acc += std::exp(std::log(weight[k]) + delta * log_ratio[k] - shift);
    }
    log_sum = shift + std::log(acc.value());
  }
  return std::max(0.0, log_sum / delta);
}

/// Partial derivatives of H_alpha with respect to each p_i, with the
/// probabilities treated as free coordinates. Requires full support.
inline std::vector<double> entropy_gradient(const Distribution& d, Alpha a) {
  if (!d.full_support()) {
    throw Error(ErrorKind::ZeroProbability, "gradient needs every p_i > 0");
  }
  std::vector<double> g(d.size());
  if (a.is_one()) {
    for (std::size_t i = 0; i < d.size(); ++i) g[i] = -std::log(d[i]) - 1.0;
    return g;
  }
  const detail::LogSupport s(d);
  const double f = detail::log_power_sum(s, a.value());
  const double scale = a.value() / (1.0 - a.value());
  for (std::size_t i = 0; i < d.size(); ++i) {
    g[i] = scale * std::exp(a.delta() * s.logp[i] - f);
  }
  return g;
}

}  // namespace renyi

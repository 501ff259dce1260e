#pragma once

// Renyi entropy of binomial and Poisson laws.
//
// Log-pmfs use the saddle-point form (Stirling remainder plus the deviance
// term bd0) rather than differences of lgamma values, which keeps full
// relative accuracy in the far tails and for n up to 1e6 and beyond.

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "renyi/alpha.hpp"
#include "renyi/compensated_sum.hpp"
#include "renyi/detail/log_support.hpp"
#include "renyi/error.hpp"

namespace renyi {

struct BinomialSpec {
  std::size_t n = 0;
  double p = 0.0;
};

struct PoissonSpec {
  double lambda = 1.0;
};

struct TruncationPolicy {
  double rel_tol = 1e-14;
  std::size_t max_terms = 1'000'000;
};

struct PoissonEntropy {
  double value = 0.0;
  double tail_bound = 0.0;  // bound on |value - exact entropy| from the dropped tail
  std::size_t terms = 0;
};

struct ConvergenceRow {
  std::size_t n = 0;
  double h_binomial = 0.0;
  double h_poisson = 0.0;
  double difference = 0.0;
  double tail_bound = 0.0;
};

namespace detail {

/// log(n!) - log(sqrt(2 pi n) (n/e)^n) for integer n.
inline double stirlerr(double n) {
  static constexpr std::array<double, 16> table = {
      0.0,
      0.08106146679532725821967026,
      0.04134069595540929409382208,
      0.02767792568499833914878929,
      0.02079067210376509311152277,
      0.01664469118982119216319487,
      0.01387612882307074799874573,
      0.01189670994589177009505572,
      0.01041126526197209649747857,
      0.009255462182712732917728637,
      0.008330563433362871256469319,
      0.007573675487951840794972024,
      0.006942840107209529865664153,
      0.006408994188004207068439631,
      0.005951370112758847735624416,
      0.00555473355196280137103869,
  };
  constexpr double s0 = 1.0 / 12.0, s1 = 1.0 / 360.0, s2 = 1.0 / 1260.0, s3 = 1.0 / 1680.0,
                   s4 = 1.0 / 1188.0;
  if (n <= 15.0) return table[static_cast<std::size_t>(n)];
  const double nn = n * n;
  if (n > 500.0) return (s0 - s1 / nn) / n;
  if (n > 80.0) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (n > 35.0) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

/// x log(x/np) + np - x, computed by series when x is close to np.
inline double bd0(double x, double np) {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

inline constexpr double kLog2Pi = 1.8378770664093454835606594728112;

}  // namespace detail

/// log P(X = k) for X ~ Binomial(n, p); q = 1 - p passed separately.
inline double binomial_log_pmf(std::size_t k, std::size_t n, double p, double q) {
  if (k > n) return -HUGE_VAL;
  const double x = static_cast<double>(k);
  const double nn = static_cast<double>(n);
  if (p == 0.0) return k == 0 ? 0.0 : -HUGE_VAL;
  if (q == 0.0) return k == n ? 0.0 : -HUGE_VAL;
  if (k == 0) {
    if (n == 0) return 0.0;
    return p < 0.1 ? -detail::bd0(nn, nn * q) - nn * p : nn * std::log(q);
  }
  if (k == n) return q < 0.1 ? -detail::bd0(nn, nn * p) - nn * q : nn * std::log(p);
  const double lc = detail::stirlerr(nn) - detail::stirlerr(x) - detail::stirlerr(nn - x) -
                    detail::bd0(x, nn * p) - detail::bd0(nn - x, nn * q);
  const double lf = detail::kLog2Pi + std::log(x) + std::log1p(-x / nn);
  return lc - 0.5 * lf;
}

/// log P(X = k) for X ~ Poisson(lambda).
inline double poisson_log_pmf(std::size_t k, double lambda) {
  if (k == 0) return -lambda;
  const double x = static_cast<double>(k);
  return -detail::stirlerr(x) - detail::bd0(x, lambda) - 0.5 * (detail::kLog2Pi + std::log(x));
}

namespace detail {

inline void check_binomial(const BinomialSpec& spec) {
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw Error(ErrorKind::InvalidRange, "binomial p must lie in [0, 1]");
  }
}

inline void check_poisson(const PoissonSpec& spec) {
  if (!(spec.lambda > 0.0) || !std::isfinite(spec.lambda)) {
    throw Error(ErrorKind::InvalidRange, "Poisson lambda must be > 0");
  }
}

// Renyi entropy from log-probabilities of a complete (sums to one) law.
inline double entropy_from_logs(std::span<const double> logs, Alpha a) {
  LogSupport s;
  for (double l : logs) {
    if (l == -HUGE_VAL) continue;
    s.p.push_back(std::exp(l));
    if (s.p.back() == 0.0) {
      s.p.pop_back();
      continue;
    }
    s.logp.push_back(l);
    s.max_abs_log = std::max(s.max_abs_log, -l);
  }
  if (a.is_one()) {
    CompensatedSum acc;
    for (std::size_t k = 0; k < s.size(); ++k) acc -= s.p[k] * s.logp[k];
    return acc.value();
  }
  return log_power_sum(s, a.value()) / (1.0 - a.value());
}

}  // namespace detail

inline double binomial_renyi(const BinomialSpec& spec, Alpha a) {
  detail::check_binomial(spec);
  if (spec.p == 0.0 || spec.p == 1.0 || spec.n == 0) return 0.0;
  const double q = 1.0 - spec.p;
  std::vector<double> logs(spec.n + 1);
  for (std::size_t k = 0; k <= spec.n; ++k) logs[k] = binomial_log_pmf(k, spec.n, spec.p, q);
  return detail::entropy_from_logs(logs, a);
}

/// Truncated series for the Poisson entropy. Past k + 1 > lambda 2^(1/alpha)
/// the terms pi_k^alpha shrink by a ratio rho = (lambda/(k+1))^alpha < 1/2, so
/// the dropped tail is at most term_k rho / (1 - rho); summation stops once the
/// implied entropy error falls below rel_tol times the current value.
inline PoissonEntropy poisson_renyi(const PoissonSpec& spec, Alpha a, const TruncationPolicy& trunc = {}) {
  detail::check_poisson(spec);
  if (!(trunc.rel_tol > 0.0) || trunc.max_terms < 1) {
    throw Error(ErrorKind::InvalidRange, "truncation policy needs rel_tol > 0 and max_terms >= 1");
  }
  const double lambda = spec.lambda;
  const double alpha = a.value();
  const bool shannon = a.is_one();
  const double threshold = lambda * std::exp2(1.0 / alpha);
  // The mode term carries the largest power; shifting by it avoids underflow.
  const double mode = std::floor(lambda);
  const double shift = alpha * poisson_log_pmf(static_cast<std::size_t>(mode), lambda);

  CompensatedSum acc;
  PoissonEntropy out;
  for (std::size_t k = 0; k < trunc.max_terms; ++k) {
    const double l = poisson_log_pmf(k, lambda);
    double value, bound = HUGE_VAL;
    if (shannon) {
      acc -= std::exp(l) * l;
      value = acc.value();
      if (static_cast<double>(k + 1) > threshold) {
        // -x log x <= (2/e) sqrt(x), and sqrt(pi_j) decays by sqrt(rho) per step
        const double rho = std::sqrt(lambda / static_cast<double>(k + 1));
        bound = 2.0 / std::numbers::e * std::exp(0.5 * l) * rho / (1.0 - rho);
      }
    } else {
      const double term = std::exp(alpha * l - shift);
      acc += term;
      value = (shift + std::log(acc.value())) / (1.0 - alpha);
      if (static_cast<double>(k + 1) > threshold) {
        const double rho = std::pow(lambda / static_cast<double>(k + 1), alpha);
        const double tail = term * rho / (1.0 - rho);
        bound = tail / acc.value() / std::fabs(1.0 - alpha);
      }
    }
    if (bound <= trunc.rel_tol * std::fabs(value) || bound == 0.0) {
      out.value = value;
      out.tail_bound = bound;
      out.terms = k + 1;
      return out;
    }
  }
  throw Error(ErrorKind::TruncationFailure,
              "Poisson series did not meet rel_tol within " + std::to_string(trunc.max_terms) + " terms");
}

/// H_alpha(Binomial(n, lambda/n)) against H_alpha(Poisson(lambda)) for each n.
inline std::vector<ConvergenceRow> convergence_table(double lambda, Alpha a, std::span<const std::size_t> n_values,
                                                     const TruncationPolicy& trunc = {}) {
  const PoissonEntropy poi = poisson_renyi({lambda}, a, trunc);
  std::vector<ConvergenceRow> rows;
  for (std::size_t n : n_values) {
    if (static_cast<double>(n) < lambda) {
      throw Error(ErrorKind::InvalidRange, "need n >= lambda so that lambda/n <= 1");
    }
    const double hb = binomial_renyi({n, lambda / static_cast<double>(n)}, a);
    rows.push_back({n, hb, poi.value, hb - poi.value, poi.tail_bound});
  }
  return rows;
}

}  // namespace renyi

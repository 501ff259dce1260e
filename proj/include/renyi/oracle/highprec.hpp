#pragma once

// Reference evaluators in double-double precision. They are deliberately the
// textbook formulas (no expm1 tricks, no cumulant branches) so that they share
// no numerical path with the production kernels they check.

#include <span>
#include <vector>

#include "renyi/alpha.hpp"
#include "renyi/distribution.hpp"
#include "renyi/oracle/double_double.hpp"

namespace renyi::oracle {

/// Renyi entropy of the probabilities `p` (zeros skipped). `shannon` selects
/// -sum p log p; otherwise log(sum p^alpha) / (1 - alpha).
inline DD entropy_dd(std::span<const DD> p, DD alpha, bool shannon) {
  DD acc(0.0);
  if (shannon) {
    for (const DD& x : p) {
      if (x.hi > 0.0) acc -= x * log(x);
    }
    return acc;
  }
  std::vector<DD> scaled;
  double shift = -HUGE_VAL;
  for (const DD& x : p) {
    if (x.hi > 0.0) {
      scaled.push_back(alpha * log(x));
      shift = std::max(shift, scaled.back().hi);
    }
  }
  for (const DD& t : scaled) acc += exp(t - DD(shift));
  return (DD(shift) + log(acc)) / (DD(1.0) - alpha);
}

inline std::vector<DD> to_dd(const Distribution& d) {
  return {d.probs().begin(), d.probs().end()};
}

inline DD highprec_entropy_dd(const Distribution& d, DD alpha) {
  const std::vector<DD> p = to_dd(d);
  return entropy_dd(p, alpha, false);
}

inline double highprec_entropy(const Distribution& d, Alpha a) {
  const std::vector<DD> p = to_dd(d);
  return static_cast<double>(entropy_dd(p, DD(a.value()), a.is_one()));
}

/// H(p) - H(p + eps c) with the perturbed vector formed exactly in
/// double-double (p_k + c_k eps needs at most two doubles).
inline double highprec_perturbation_delta(const Distribution& d, std::span<const double> c,
                                          double eps, Alpha a) {
  const std::vector<DD> p = to_dd(d);
  std::vector<DD> moved(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) moved[k] = p[k] + two_prod(c[k], eps);
  const DD alpha(a.value());
  return static_cast<double>(entropy_dd(p, alpha, a.is_one()) -
                             entropy_dd(moved, alpha, a.is_one()));
}

}  // namespace renyi::oracle

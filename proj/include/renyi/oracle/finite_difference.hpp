#pragma once

#include "renyi/error.hpp"

namespace renyi::oracle {

struct DiffScheme {
  int order = 1;          // 1 or 2
  double step = 1e-4;
  bool richardson = true;  // one extrapolation level with step/2
  // Refuse stencils that reach x - 2h <= 0 (orders alpha must stay positive).
  bool positive_domain = false;
};

namespace detail {

template <class T, class Fn>
T central(Fn& fn, const T& x, const T& h, int order) {
  if (order == 1) return (fn(x + h) - fn(x - h)) / (T(2.0) * h);
  return (fn(x + h) - T(2.0) * fn(x) + fn(x - h)) / (h * h);
}

}  // namespace detail

/// Central difference of `fn` at x. The number type T may be double or a
/// wider type such as DD, in which case the whole stencil is evaluated in T.
template <class T, class Fn>
T finite_difference(Fn&& fn, const T& x, const DiffScheme& scheme) {
  if (scheme.order != 1 && scheme.order != 2) {
    throw Error(ErrorKind::InvalidRange, "difference order must be 1 or 2");
  }
  if (!(scheme.step > 0.0)) throw Error(ErrorKind::InvalidRange, "difference step must be > 0");
  const T h(scheme.step);
  if (scheme.positive_domain && !(x - T(2.0) * h > T(0.0))) {
    throw Error(ErrorKind::DomainViolation, "stencil leaves the positive half-line");
  }
  const T coarse = detail::central(fn, x, h, scheme.order);
  if (!scheme.richardson) return coarse;
  const T fine = detail::central(fn, x, h / T(2.0), scheme.order);
  // both stencils have error c h^2 + O(h^4)
  return (T(4.0) * fine - coarse) / T(3.0);
}

}  // namespace renyi::oracle

#pragma once

// Double-double arithmetic: an unevaluated sum hi + lo of two doubles with
// |lo| <= ulp(hi)/2, giving about 106 significand bits. Built from the
// error-free transformations two_sum and two_prod (via fma). Only what the
// reference evaluators need is provided.

#include <cmath>
#include <limits>

namespace renyi::oracle {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double x) : hi(x), lo(0.0) {}  // NOLINT: implicit on purpose
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD operator+(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  const DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
  const double q1 = a.hi / b.hi;
  DD r = a - b * DD(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * DD(q2);
  const double q3 = r.hi / b.hi;
  return DD(q1) + DD(q2) + DD(q3);
}

inline DD& operator+=(DD& a, DD b) { return a = a + b; }
inline DD& operator-=(DD& a, DD b) { return a = a - b; }
inline DD& operator*=(DD& a, DD b) { return a = a * b; }
inline DD& operator/=(DD& a, DD b) { return a = a / b; }

inline bool operator<(DD a, DD b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DD a, DD b) { return b < a; }
inline bool operator<=(DD a, DD b) { return !(b < a); }
inline bool operator>=(DD a, DD b) { return !(a < b); }
inline bool operator==(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }

inline DD abs(DD a) { return a.hi < 0.0 ? -a : a; }

inline DD ldexp(DD a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }

inline constexpr DD kLn2{0.6931471805599453, 2.3190468138462996e-17};

/// e^x. x = k ln2 + r, r scaled down by 2^-10, Taylor series, then squared back.
inline DD exp(DD x) {
  if (x.hi < -745.0) return DD(0.0);
  if (x.hi > 709.0) return DD(std::numeric_limits<double>::infinity());
  const double k = std::nearbyint(x.hi / kLn2.hi);
  DD r = x - kLn2 * DD(k);
  r = ldexp(r, -10);
  // exp(r) - 1 by Taylor; |r| < 4e-4 so 12 terms exceed 106 bits.
  DD term = r;
  DD sum = r;
  for (int j = 2; j <= 14; ++j) {
    term = term * r / DD(static_cast<double>(j));
    sum += term;
  }
  // (1 + s)^2 - 1 = s (2 + s), kept in expm1 form to preserve small values
  for (int i = 0; i < 10; ++i) sum = sum * (DD(2.0) + sum);
  return ldexp(sum + DD(1.0), static_cast<int>(k));
}

/// Natural log of a positive value by Newton steps on exp.
inline DD log(DD x) {
  if (!(x.hi > 0.0)) return DD(std::numeric_limits<double>::quiet_NaN());
  DD y(std::log(x.hi));
  for (int i = 0; i < 2; ++i) y = y + x * exp(-y) - DD(1.0);
  return y;
}

}  // namespace renyi::oracle

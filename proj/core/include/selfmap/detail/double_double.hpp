#pragma once

#include <cmath>

// Compensated (double-double) arithmetic for the series accumulator.  The
// alternating erf series cancels catastrophically in plain doubles once |z|
// grows (intermediate terms reach ~1e5 at |z| = 4), so both the terms and the
// running sum are kept as unevaluated hi+lo pairs.  Error-free transforms are
// the classical Dekker/Knuth ones; two_prod relies on fma.

namespace selfmap::detail {

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// Requires |a| >= |b| (or a == 0).
inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  DD t = two_sum(a.lo, b.lo);
  DD r = quick_two_sum(s.hi, s.lo + t.hi);
  return quick_two_sum(r.hi, r.lo + t.lo);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  return quick_two_sum(p.hi, p.lo + (a.hi * b.lo + a.lo * b.hi));
}

// Quotient of two exactly representable doubles, accurate to ~eps^2.
inline DD dd_from_div(double a, double b) {
  double q1 = a / b;
  double r = std::fma(-q1, b, a);
  return quick_two_sum(q1, r / b);
}

inline double dd_value(DD a) { return a.hi + a.lo; }

struct CDD {
  DD re;
  DD im;
};

inline CDD cdd_from(double re, double im) { return {{re, 0.0}, {im, 0.0}}; }

inline CDD cdd_add(CDD a, CDD b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

inline CDD cdd_mul(CDD a, CDD b) {
  return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
          dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline CDD cdd_scale(CDD a, DD s) { return {dd_mul(a.re, s), dd_mul(a.im, s)}; }

inline double cdd_abs(CDD a) {
  return std::hypot(dd_value(a.re), dd_value(a.im));
}

}  // namespace selfmap::detail

#pragma once

// Unevaluated sums hi + lo of two doubles (~106-bit significand), built on
// the error-free transformations TwoSum and TwoProd. Only what the series
// oracle needs.

#include <cmath>
#include <complex>

namespace faddeeva::detail {

struct dd {
  double hi = 0;
  double lo = 0;

  constexpr dd() = default;
  constexpr dd(double h) : hi(h) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  const dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, double b) {
  const double q1 = a.hi / b;
  const dd r = a - two_prod(q1, b);
  const double q2 = r.hi / b;
  const dd r2 = r - two_prod(q2, b);
  const double q3 = r2.hi / b;
  return dd(q1) + dd(q2) + dd(q3);
}

inline double abs_approx(dd a) { return std::fabs(a.hi); }

struct dd_complex {
  dd re;
  dd im;
};

inline dd_complex operator+(dd_complex a, dd_complex b) {
  return {a.re + b.re, a.im + b.im};
}

inline dd_complex operator*(dd_complex a, dd_complex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline dd_complex operator*(dd_complex a, dd s) { return {a.re * s, a.im * s}; }

inline dd_complex operator/(dd_complex a, double s) { return {a.re / s, a.im / s}; }

inline double abs_approx(dd_complex a) { return std::hypot(a.re.hi, a.im.hi); }

inline std::complex<double> to_complex(dd_complex a) {
  return {a.re.to_double(), a.im.to_double()};
}

}  // namespace faddeeva::detail

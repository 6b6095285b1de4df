#pragma once

// Complex arithmetic with a fixed operation order. std::complex operators
// are free to use FMA, scaling or NaN recovery paths depending on the
// toolchain; the evaluators need the same bits everywhere.

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>

#include "faddeeva/errors.hpp"

namespace faddeeva {

using complex = std::complex<double>;

namespace detail {

inline complex mul(complex a, complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

inline complex scale(double s, complex a) {
  return {s * a.real(), s * a.imag()};
}

// Smith's algorithm.
inline complex div(complex a, complex b) {
  const double br = b.real(), bi = b.imag();
  if (std::fabs(br) >= std::fabs(bi)) {
    const double r = bi / br;
    const double d = br + bi * r;
    return {(a.real() + a.imag() * r) / d, (a.imag() - a.real() * r) / d};
  }
  const double r = br / bi;
  const double d = br * r + bi;
  return {(a.real() * r + a.imag()) / d, (a.imag() * r - a.real()) / d};
}

inline std::string to_string(complex z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << z.real() << ", " << z.imag() << ')';
  return os.str();
}

inline void require_finite(complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw domain_error("argument " + to_string(z) + " is not finite");
  }
}

inline constexpr double max_exp_argument = 709.782712893384;  // log(DBL_MAX)

/// exp(-z^2) = exp(y^2 - x^2) (cos 2xy - i sin 2xy). The real exponent is
/// formed once; overflow of the modulus is reported, never returned as inf.
inline complex exp_neg_square(complex z) {
  const double x = z.real(), y = z.imag();
  const double exponent = y * y - x * x;
  if (exponent > max_exp_argument) {
    throw overflow_error("exp(-z^2) overflows at z = " + to_string(z));
  }
  const double modulus = std::exp(exponent);
  const double phase = 2 * x * y;
  return {modulus * std::cos(phase), -modulus * std::sin(phase)};
}

inline complex require_finite_result(complex r, complex z) {
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
    throw overflow_error("result overflows at z = " + to_string(z));
  }
  return r;
}

}  // namespace detail
}  // namespace faddeeva

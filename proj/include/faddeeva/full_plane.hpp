#pragma once

// Whole-plane evaluation through the reflection identities
//   w(-z)    = 2 e^{-z^2} - w(z)
//   erfc(-z) = 2 - erfc(z)
//   erf(-z)  = -erf(z)
// On the boundary of the direct half-plane (Im z = 0 for w, Re z = 0 for
// erf/erfc) the direct evaluator is used without reflection.

#include <complex>
#include <string_view>

#include "faddeeva/coefficient_table.hpp"
#include "faddeeva/detail/complex_ops.hpp"
#include "faddeeva/rational.hpp"
#include "faddeeva/reference.hpp"

namespace faddeeva {

enum class Method { rational, reference };

inline std::string_view to_string(Method m) {
  return m == Method::rational ? "rational" : "reference";
}

inline complex w_half_plane(complex z, const CoefficientTable& t, Method m) {
  return m == Method::rational ? w_rational(z, t) : w_reference(z, t);
}

inline complex erfc_half_plane(complex z, const CoefficientTable& t, Method m) {
  return m == Method::rational ? erfc_rational(z, t) : erfc_reference(z, t);
}

inline complex erf_half_plane(complex z, const CoefficientTable& t, Method m) {
  return m == Method::rational ? erf_rational(z, t) : erf_reference(z, t);
}

inline complex w_full_plane(complex z, const CoefficientTable& table,
                            Method method = Method::rational) {
  detail::require_finite(z);
  if (z.imag() >= 0) return w_half_plane(z, table, method);
  const complex ez = detail::exp_neg_square(z);
  const complex reflected = w_half_plane(-z, table, method);
  return detail::require_finite_result(
      complex(2 * ez.real() - reflected.real(), 2 * ez.imag() - reflected.imag()),
      z);
}

inline complex erfc_full_plane(complex z, const CoefficientTable& table,
                               Method method = Method::rational) {
  detail::require_finite(z);
  if (z.real() == 0) {
    // erfc(iy) = 1 - erf(iy) and erf(iy) is purely imaginary.
    return {1.0, erfc_half_plane(complex(0.0, z.imag()), table, method).imag()};
  }
  if (z.real() > 0) return erfc_half_plane(z, table, method);
  const complex c = erfc_half_plane(-z, table, method);
  return {2.0 - c.real(), 0.0 - c.imag()};
}

inline complex erf_full_plane(complex z, const CoefficientTable& table,
                              Method method = Method::rational) {
  detail::require_finite(z);
  if (z.real() == 0) {
    // Oddness plus conjugate symmetry make erf(iy) purely imaginary.
    return {0.0, erf_half_plane(complex(0.0, z.imag()), table, method).imag()};
  }
  if (z.real() > 0) return erf_half_plane(z, table, method);
  const complex e = erf_half_plane(-z, table, method);
  return {-e.real(), -e.imag()};
}

/// Real and imaginary parts of w(x + iy): the Voigt function K and its
/// companion L.
struct VoigtValue {
  double K = 0;
  double L = 0;
};

inline VoigtValue voigt(double x, double y, const CoefficientTable& table,
                        Method method = Method::rational) {
  if (y < 0) {
    throw domain_error("voigt needs y >= 0, got y = " + std::to_string(y));
  }
  const complex w = w_full_plane(complex(x, y), table, method);
  return {w.real(), w.imag()};
}

}  // namespace faddeeva

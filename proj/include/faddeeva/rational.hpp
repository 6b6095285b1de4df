#pragma once

// Shifted-Fourier rational approximation of the Faddeeva function,
//
//   w(z) ~ e^{sigma^2} / (tau_m u) + sum_{n=1}^{N} (A_n u + B_n) / (n^2 pi^2 + tau_m^2 u^2),
//   u = sigma - i z,
//
// and the erfc/erf approximations obtained through erfc(z) = e^{-z^2} w(iz).
// Every exponential lives in the CoefficientTable; an evaluation is pure
// complex arithmetic.

#include <complex>

#include "faddeeva/coefficient_table.hpp"
#include "faddeeva/detail/complex_ops.hpp"
#include "faddeeva/errors.hpp"

namespace faddeeva {

namespace detail {

// Terms are added in ascending n after the leading e^{sigma^2}/(tau_m u)
// term. This order reproduces the published tables to the last digit.
inline complex shifted_rational_sum(complex u, const CoefficientTable& t) {
  const double tm = t.margin();
  const complex u_sq = mul(u, u);
  const complex scaled_u_sq = scale(t.margin_sq(), u_sq);
  const auto A = t.A();
  const auto B = t.B();
  const auto n_pi_sq = t.n_pi_sq();

  complex acc = div(complex(t.exp_sigma_sq(), 0.0), scale(tm, u));
  for (std::size_t k = 0; k < A.size(); ++k) {
    const complex num(A[k] * u.real() + B[k], A[k] * u.imag());
    const complex den(n_pi_sq[k] + scaled_u_sq.real(), scaled_u_sq.imag());
    acc += div(num, den);
  }
  return acc;
}

}  // namespace detail

/// w(z) for Im z >= 0. The boundary y = 0 is accepted: Re(sigma - iz) =
/// sigma + y stays positive so no denominator can vanish.
inline complex w_rational(complex z, const CoefficientTable& table) {
  detail::require_finite(z);
  if (z.imag() < 0) {
    throw domain_error("w_rational needs Im z >= 0, got z = " +
                       detail::to_string(z));
  }
  const complex u(table.shift() + z.imag(), -z.real());
  return detail::shifted_rational_sum(u, table);
}

/// erfc(z) = e^{-z^2} w(iz) for Re z >= 0.
inline complex erfc_rational(complex z, const CoefficientTable& table) {
  detail::require_finite(z);
  if (z.real() < 0) {
    throw domain_error("erfc_rational needs Re z >= 0, got z = " +
                       detail::to_string(z));
  }
  const complex w_iz = w_rational(complex(-z.imag(), z.real()), table);
  return detail::require_finite_result(
      detail::mul(detail::exp_neg_square(z), w_iz), z);
}

/// erf(z) = 1 - erfc(z) for Re z >= 0. The subtraction happens exactly
/// once, so erf_rational(z) and erfc_rational(z) complement bit-for-bit.
inline complex erf_rational(complex z, const CoefficientTable& table) {
  const complex c = erfc_rational(z, table);
  return {1.0 - c.real(), 0.0 - c.imag()};
}

}  // namespace faddeeva

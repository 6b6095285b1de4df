#pragma once

// Exponential-form approximation of w(z), built from the same cosine
// expansion of exp(-t^2/4) but without the shift:
//
//   w(z) ~ i (1 - e^{i tau_m z}) / (tau_m z)
//        + i (tau_m^2 z / sqrt(pi)) sum_{n=1}^{N} a_n ((-1)^n e^{i tau_m z} - 1) / (n^2 pi^2 - tau_m^2 z^2)
//
// and its erfc/erf counterparts. One complex exponential per call; used as
// the reference the rational form is measured against.

#include <cmath>
#include <complex>
#include <numbers>

#include "faddeeva/coefficient_table.hpp"
#include "faddeeva/detail/complex_ops.hpp"
#include "faddeeva/errors.hpp"

namespace faddeeva {

namespace detail {

inline constexpr double small_argument = 1e-8;

// (1 - e^{-v}) / v with the removable singularity at v = 0 handled by
// its Maclaurin expansion.
inline complex one_minus_exp_over(complex v, complex e_minus_v) {
  if (std::abs(v) < small_argument) {
    const complex v2 = mul(v, v);
    const complex v3 = mul(v2, v);
    return complex(1.0, 0.0) - v / 2.0 + v2 / 6.0 - v3 / 24.0;
  }
  return div(complex(1.0 - e_minus_v.real(), -e_minus_v.imag()), v);
}

inline complex exp_of(double re, double im) {
  const double m = std::exp(re);
  return {m * std::cos(im), m * std::sin(im)};
}

}  // namespace detail

/// Reference w(z) for Im z >= 0.
inline complex w_reference(complex z, const CoefficientTable& table) {
  detail::require_finite(z);
  if (z.imag() < 0) {
    throw domain_error("w_reference needs Im z >= 0, got z = " +
                       detail::to_string(z));
  }
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  const double tm = table.margin();
  const double x = z.real(), y = z.imag();
  // e^{i tau_m z}
  const complex e = detail::exp_of(-tm * y, tm * x);
  const complex tz(tm * x, tm * y);
  const complex tz_sq = detail::mul(tz, tz);
  const auto a = table.a();
  const auto n_pi_sq = table.n_pi_sq();

  complex acc(0.0, 0.0);
  for (int n = 1; n <= table.terms(); ++n) {
    const double an = a[n];
    const double parity = (n % 2) ? -1.0 : 1.0;
    const complex den(n_pi_sq[n - 1] - tz_sq.real(), -tz_sq.imag());
    if (den == complex(0.0, 0.0)) {
      // tau_m z = +-n pi; limit of the term is -i a_n / (2 tau_m z).
      acc += detail::div(complex(0.0, -an), detail::scale(2.0, tz));
      continue;
    }
    const complex num(an * (parity * e.real() - 1.0), an * (parity * e.imag()));
    acc += detail::div(num, den);
  }
  const complex pre = detail::scale(tm * tm / sqrt_pi, z);
  const complex s = detail::mul(pre, acc);
  const complex second(-s.imag(), s.real());  // i * s

  // i (1 - e^{i tau_m z}) / (tau_m z) == (1 - e^{-v}) / v with v = -i tau_m z
  const complex lead = detail::one_minus_exp_over(complex(tm * y, -tm * x), e);
  return second + lead;
}

/// Reference erfc(z) for Re z >= 0:
///   e^{-z^2} [ (1 - e^{-tau_m z}) / (tau_m z)
///            + (tau_m^2 z / sqrt(pi)) sum a_n (1 - (-1)^n e^{-tau_m z}) / (n^2 pi^2 + tau_m^2 z^2) ]
inline complex erfc_reference(complex z, const CoefficientTable& table) {
  detail::require_finite(z);
  if (z.real() < 0) {
    throw domain_error("erfc_reference needs Re z >= 0, got z = " +
                       detail::to_string(z));
  }
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  const double tm = table.margin();
  const double x = z.real(), y = z.imag();
  // e^{-tau_m z}
  const complex e = detail::exp_of(-tm * x, -tm * y);
  const complex tz(tm * x, tm * y);
  const complex tz_sq = detail::mul(tz, tz);
  const auto a = table.a();
  const auto n_pi_sq = table.n_pi_sq();

  complex acc(0.0, 0.0);
  for (int n = 1; n <= table.terms(); ++n) {
    const double an = a[n];
    const double parity = (n % 2) ? -1.0 : 1.0;
    const complex den(n_pi_sq[n - 1] + tz_sq.real(), tz_sq.imag());
    if (den == complex(0.0, 0.0)) {
      // tau_m z = +-i n pi; limit of the term is a_n / (2 tau_m z).
      acc += detail::div(complex(an, 0.0), detail::scale(2.0, tz));
      continue;
    }
    const complex num(an * (1.0 - parity * e.real()), an * (-parity * e.imag()));
    acc += detail::div(num, den);
  }
  const complex pre = detail::scale(tm * tm / sqrt_pi, z);
  const complex w_iz = detail::mul(pre, acc) + detail::one_minus_exp_over(tz, e);
  return detail::require_finite_result(
      detail::mul(detail::exp_neg_square(z), w_iz), z);
}

/// Reference erf(z) = 1 - erfc(z) for Re z >= 0.
inline complex erf_reference(complex z, const CoefficientTable& table) {
  const complex c = erfc_reference(z, table);
  return {1.0 - c.real(), 0.0 - c.imag()};
}

}  // namespace faddeeva

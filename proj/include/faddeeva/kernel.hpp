#pragma once

#include <cmath>
#include <numbers>

#include "faddeeva/coefficient_table.hpp"

namespace faddeeva {

struct KernelValue {
  double value = 0;
  /// |t - 2 shift| > tau_m: the cosine series is periodic there and no
  /// longer tracks the Gaussian.
  bool outside_window = false;
};

/// Cosine-series approximation of exp(-(t - 2 shift)^2 / 4):
///   -a_0/2 + sum_{n=0}^{N} a_n cos(n pi (t - 2 shift) / tau_m).
/// shift = 0 gives the unshifted kernel exp(-t^2/4).
inline KernelValue exp_kernel_approx(double t, double shift,
                                     const CoefficientTable& table) {
  constexpr double pi = std::numbers::pi;
  const double u = t - 2 * shift;
  const auto a = table.a();
  double sum = 0;
  for (int n = table.terms(); n >= 1; --n) {
    sum += a[n] * std::cos(n * pi * u / table.margin());
  }
  sum += a[0] / 2;  // -a_0/2 + a_0 cos(0)
  return {sum, std::fabs(u) > table.margin()};
}

}  // namespace faddeeva

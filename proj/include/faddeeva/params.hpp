#pragma once

#include <cmath>
#include <string>

#include "faddeeva/errors.hpp"

namespace faddeeva {

/// The triple controlling every approximation: number of Fourier terms,
/// margin value tau_m (half-width of the expansion interval) and the shift
/// constant sigma that moves the kernel peak to t = 2 sigma.
struct ApproximationParams {
  int terms = 23;
  double margin = 12.0;
  double shift = 2.0;

  friend bool operator==(const ApproximationParams&,
                         const ApproximationParams&) = default;
};

inline void validate(const ApproximationParams& p) {
  if (p.terms < 1) {
    throw invalid_params("number of terms must be >= 1, got " +
                         std::to_string(p.terms));
  }
  if (!(p.margin > 0.0) || !std::isfinite(p.margin)) {
    throw invalid_params("margin value tau_m must be positive and finite");
  }
  if (!(p.shift > 0.0) || !std::isfinite(p.shift)) {
    throw invalid_params("shift constant sigma must be positive and finite");
  }
}

/// Validating constructor; the defaults give N = 23, tau_m = 12, sigma = 2.
inline ApproximationParams make_params(int terms = 23, double margin = 12.0,
                                       double shift = 2.0) {
  ApproximationParams p{terms, margin, shift};
  validate(p);
  return p;
}

}  // namespace faddeeva

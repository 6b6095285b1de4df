#pragma once

#include <stdexcept>
#include <string>

namespace faddeeva {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (N, tau_m, sigma) outside their admissible ranges.
class invalid_params : public error {
 public:
  using error::error;
};

/// Argument outside the half-plane an evaluator is defined on, or not finite.
class domain_error : public error {
 public:
  using error::error;
};

/// exp(-z^2) or a reflected result does not fit in a double.
class overflow_error : public error {
 public:
  using error::error;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class no_convergence : public error {
 public:
  using error::error;
};

/// Series oracle called outside the radius where it is accurate.
class out_of_range : public error {
 public:
  using error::error;
};

}  // namespace faddeeva

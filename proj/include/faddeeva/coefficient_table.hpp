#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "faddeeva/params.hpp"

namespace faddeeva {

/// Precomputed Fourier data for one parameter set.
///
/// Holds the Gaussian coefficients a_0..a_N of the cosine expansion of
/// exp(-t^2/4) on [-tau_m, tau_m], the shifted-rational coefficients
/// A_1..A_N and B_1..B_N, the squared frequencies (n pi)^2 and exp(sigma^2).
/// Built once by build_table() and immutable afterwards, so a single table
/// can be shared by any number of concurrent evaluators.
class CoefficientTable {
 public:
  const ApproximationParams& params() const noexcept { return params_; }
  int terms() const noexcept { return params_.terms; }
  double margin() const noexcept { return params_.margin; }
  double shift() const noexcept { return params_.shift; }

  /// a_0..a_N (N + 1 entries).
  std::span<const double> a() const noexcept { return a_; }
  /// A_1..A_N; index n - 1.
  std::span<const double> A() const noexcept { return A_; }
  /// B_1..B_N; index n - 1.
  std::span<const double> B() const noexcept { return B_; }
  /// (n pi)^2 for n = 1..N; index n - 1.
  std::span<const double> n_pi_sq() const noexcept { return n_pi_sq_; }

  double a(int n) const { return a_.at(static_cast<std::size_t>(n)); }
  double A(int n) const { return A_.at(static_cast<std::size_t>(n - 1)); }
  double B(int n) const { return B_.at(static_cast<std::size_t>(n - 1)); }

  double exp_sigma_sq() const noexcept { return exp_sigma_sq_; }
  double margin_sq() const noexcept { return margin_sq_; }

 private:
  friend CoefficientTable build_table(const ApproximationParams& params);

  CoefficientTable() = default;

  ApproximationParams params_;
  std::vector<double> a_;
  std::vector<double> A_;
  std::vector<double> B_;
  std::vector<double> n_pi_sq_;
  double exp_sigma_sq_ = 0;
  double margin_sq_ = 0;
};

/// a_n = (2 sqrt(pi) / tau_m) exp(-n^2 pi^2 / tau_m^2)
/// A_n = 2 tau_m exp(sigma^2 - n^2 pi^2 / tau_m^2) cos(2 n pi sigma / tau_m)
/// B_n = 2 n pi  exp(sigma^2 - n^2 pi^2 / tau_m^2) sin(2 n pi sigma / tau_m)
inline CoefficientTable build_table(const ApproximationParams& params) {
  validate(params);
  constexpr double pi = std::numbers::pi;
  const int N = params.terms;
  const double tm = params.margin;
  const double sg = params.shift;

  CoefficientTable t;
  t.params_ = params;
  t.margin_sq_ = tm * tm;
  t.exp_sigma_sq_ = std::exp(sg * sg);
  t.a_.reserve(static_cast<std::size_t>(N) + 1);
  t.A_.reserve(static_cast<std::size_t>(N));
  t.B_.reserve(static_cast<std::size_t>(N));
  t.n_pi_sq_.reserve(static_cast<std::size_t>(N));

  const double a_scale = 2 * std::sqrt(pi) / tm;
  t.a_.push_back(a_scale);
  for (int n = 1; n <= N; ++n) {
    const double n_pi_sq = (n * pi) * (n * pi);
    const double decay = n_pi_sq / (tm * tm);
    const double e = std::exp(sg * sg - decay);
    const double angle = 2 * n * pi * sg / tm;
    t.n_pi_sq_.push_back(n_pi_sq);
    t.a_.push_back(a_scale * std::exp(-decay));
    t.A_.push_back(2 * tm * e * std::cos(angle));
    t.B_.push_back(2 * n * pi * e * std::sin(angle));
  }
  return t;
}

}  // namespace faddeeva

#pragma once

// Adaptive Gauss-Kronrod (10/21-point) quadrature for complex-valued
// integrands on a finite interval. The interval with the largest error
// estimate is bisected until the summed estimate meets the tolerance.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "faddeeva/detail/compensated_sum.hpp"
#include "faddeeva/errors.hpp"

namespace faddeeva {

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0;
  int subdivisions = 0;
};

namespace detail {

// Kronrod abscissae on [0, 1]; odd indices are the Gauss-Legendre nodes.
inline constexpr std::array<double, 11> kronrod_nodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.14887433898163121088482600112972,
    0.0};
inline constexpr std::array<double, 11> kronrod_weights = {
    0.011694638867371874278064396062192, 0.03255816230796472747881897245939,
    0.05475589657435199603138130024458,  0.07503967481091995276704314091619,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> gauss_weights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double lo = 0;
  double hi = 0;
  std::complex<double> value;
  double error = 0;
};

template <typename F>
Panel gauss_kronrod_21(F& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const std::complex<double> fc = f(centre);
  std::complex<double> kronrod = fc * kronrod_weights[10];
  std::complex<double> gauss(0.0, 0.0);
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kronrod_nodes[j];
    const std::complex<double> pair = f(centre - dx) + f(centre + dx);
    kronrod += pair * kronrod_weights[j];
    if (j % 2 == 1) gauss += pair * gauss_weights[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Integrates f over [lo, hi] until the total error estimate falls below
/// max(abs_tol, rel_tol |result|). Throws no_convergence once
/// max_subdivisions bisections have been spent.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double lo, double hi, double abs_tol,
                                    double rel_tol, int max_subdivisions) {
  auto by_error = [](const detail::Panel& a, const detail::Panel& b) {
    return a.error < b.error;
  };
  std::vector<detail::Panel> heap;
  heap.push_back(detail::gauss_kronrod_21(f, lo, hi));

  auto totals = [&heap] {
    detail::CompensatedComplexSum value;
    detail::CompensatedSum error;
    for (const auto& p : heap) {
      value.add(p.value);
      error.add(p.error);
    }
    return std::pair{value.value(), error.value()};
  };

  int subdivisions = 0;
  for (;;) {
    const auto [value, error] = totals();
    if (error <= std::max(abs_tol, rel_tol * std::abs(value))) {
      return {value, error, subdivisions};
    }
    if (subdivisions >= max_subdivisions) {
      throw no_convergence("adaptive quadrature: error estimate " +
                           std::to_string(error) + " after " +
                           std::to_string(subdivisions) + " subdivisions");
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const detail::Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    heap.push_back(detail::gauss_kronrod_21(f, worst.lo, mid));
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(detail::gauss_kronrod_21(f, mid, worst.hi));
    std::push_heap(heap.begin(), heap.end(), by_error);
    ++subdivisions;
  }
}

}  // namespace faddeeva

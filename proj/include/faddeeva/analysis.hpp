#pragma once

// Error analysis around the rational approximation: component-wise
// relative errors, reproduction of the published erf tables, grid sweeps
// and a timing comparison of the rational and reference forms.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstddef>
#include <exception>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "faddeeva/coefficient_table.hpp"
#include "faddeeva/format.hpp"
#include "faddeeva/full_plane.hpp"
#include "faddeeva/oracle.hpp"

namespace faddeeva::analysis {

struct RelativeError {
  double delta_re = 0;
  double delta_im = 0;
  /// The reference component was exactly zero, so the delta holds the
  /// absolute error instead.
  bool fallback_re = false;
  bool fallback_im = false;
};

/// |approx - ref| / |ref| per component; absolute error with the fallback
/// flag set where the reference component is zero.
inline RelativeError relative_error(complex approx, complex reference) {
  RelativeError e;
  auto one = [](double a, double r, double& delta, bool& fallback) {
    if (r != 0) {
      delta = std::fabs((a - r) / r);
    } else {
      delta = std::fabs(a);
      fallback = true;
    }
  };
  one(approx.real(), reference.real(), e.delta_re, e.fallback_re);
  one(approx.imag(), reference.imag(), e.delta_im, e.fallback_im);
  return e;
}

// ---------------------------------------------------------------------------
// Published tables: erf at 17 points, real parts (id 1) and imaginary
// parts (id 2), rational column against reference column.

inline constexpr std::array<std::array<double, 2>, 17> table_points = {{
    {10, 10}, {10, 5}, {5, 5}, {5, 1}, {1, 1}, {1, 0.5},
    {0.5, 0.5}, {0.5, 0.1}, {0.1, 0.1}, {0.1, 0.05}, {0.05, 0.05},
    {0.05, 0.01}, {0.01, 0.01}, {0.01, 0.005}, {0.005, 0.005},
    {0.005, 0.001}, {0.001, 0.001},
}};

struct TableRow {
  double x = 0;
  double y = 0;
  double rational = 0;
  double reference = 0;
  double delta = 0;
  bool fallback = false;
};

inline std::vector<TableRow> reproduce_table(int id,
                                             const CoefficientTable& table) {
  if (id != 1 && id != 2) {
    throw std::invalid_argument("table id must be 1 or 2, got " +
                                std::to_string(id));
  }
  std::vector<TableRow> rows;
  rows.reserve(table_points.size());
  for (const auto& [x, y] : table_points) {
    const complex z(x, y);
    const complex approx = erf_rational(z, table);
    const complex ref = erf_reference(z, table);
    const RelativeError e = relative_error(approx, ref);
    if (id == 1) {
      rows.push_back({x, y, approx.real(), ref.real(), e.delta_re, e.fallback_re});
    } else {
      rows.push_back({x, y, approx.imag(), ref.imag(), e.delta_im, e.fallback_im});
    }
  }
  return rows;
}

inline std::vector<TableRow> reproduce_table(int id,
                                             const ApproximationParams& params = {}) {
  return reproduce_table(id, build_table(params));
}

inline void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "x,y,rational,reference,delta\n";
  for (const auto& r : rows) {
    os << format_sci(r.x) << ',' << format_sci(r.y) << ','
       << format_sci(r.rational) << ',' << format_sci(r.reference) << ','
       << format_sci(r.delta) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Error maps

enum class Func { w, erf, erfc };
enum class MethodPair { rational_vs_reference, rational_vs_oracle };
enum class Spacing { linear, log };

struct Grid {
  double x_min = 1e-3;
  double x_max = 10;
  double y_min = 1e-3;
  double y_max = 10;
  int nx = 2;
  int ny = 2;
  Spacing spacing = Spacing::linear;
  /// Appended after the nx * ny grid rows.
  std::vector<complex> extra_points;
};

struct ErrorMapRow {
  double x = 0;
  double y = 0;
  complex approx;
  complex reference;
  RelativeError err;
};

struct ErrorMap {
  std::vector<ErrorMapRow> rows;
  double max_delta_re = 0;
  double max_delta_im = 0;
};

struct ErrorMapOptions {
  /// Use the half-plane evaluators directly instead of the reflection
  /// dispatcher; points outside their domain then fail.
  bool strict_domain = false;
  unsigned threads = 1;
  oracle::QuadratureSpec quadrature;
};

namespace detail {

inline std::vector<double> axis(double lo, double hi, int n, Spacing s) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    if (s == Spacing::linear) {
      v[i] = lo + (hi - lo) * f;
    } else {
      v[i] = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * f);
    }
  }
  v.front() = lo;
  v.back() = hi;
  return v;
}

template <typename E>
[[noreturn]] void rethrow_at(const E& e, complex z) {
  throw E(std::string(e.what()) + " [grid point " +
          faddeeva::detail::to_string(z) + "]");
}

}  // namespace detail

inline complex evaluate(Func f, complex z, const CoefficientTable& t, Method m,
                        bool strict) {
  switch (f) {
    case Func::w:
      return strict ? w_half_plane(z, t, m) : w_full_plane(z, t, m);
    case Func::erf:
      return strict ? erf_half_plane(z, t, m) : erf_full_plane(z, t, m);
    case Func::erfc:
      return strict ? erfc_half_plane(z, t, m) : erfc_full_plane(z, t, m);
  }
  throw std::invalid_argument("unknown function");
}

inline complex evaluate_oracle(Func f, complex z,
                               const oracle::QuadratureSpec& spec) {
  switch (f) {
    case Func::w:
      return oracle::w_value(z, spec);
    case Func::erf:
      return oracle::erf_value(z, spec);
    case Func::erfc:
      return oracle::erfc_value(z, spec);
  }
  throw std::invalid_argument("unknown function");
}

inline ErrorMap error_map(Func func, const Grid& grid,
                          const CoefficientTable& table, MethodPair pair,
                          const ErrorMapOptions& options = {}) {
  if (grid.nx < 2 || grid.ny < 2) {
    throw std::invalid_argument("error map needs nx, ny >= 2");
  }
  if (grid.spacing == Spacing::log &&
      !(grid.x_min > 0 && grid.x_max > 0 && grid.y_min > 0 && grid.y_max > 0)) {
    throw std::invalid_argument("log spacing needs positive grid bounds");
  }
  const auto xs = detail::axis(grid.x_min, grid.x_max, grid.nx, grid.spacing);
  const auto ys = detail::axis(grid.y_min, grid.y_max, grid.ny, grid.spacing);

  std::vector<complex> points;
  points.reserve(xs.size() * ys.size() + grid.extra_points.size());
  for (double y : ys) {
    for (double x : xs) points.emplace_back(x, y);
  }
  points.insert(points.end(), grid.extra_points.begin(), grid.extra_points.end());

  ErrorMap map;
  map.rows.resize(points.size());
  auto eval_point = [&](std::size_t i) {
    const complex z = points[i];
    try {
      const complex approx =
          evaluate(func, z, table, Method::rational, options.strict_domain);
      const complex ref =
          pair == MethodPair::rational_vs_reference
              ? evaluate(func, z, table, Method::reference, options.strict_domain)
              : evaluate_oracle(func, z, options.quadrature);
      map.rows[i] = {z.real(), z.imag(), approx, ref, relative_error(approx, ref)};
    } catch (const overflow_error& e) {
      detail::rethrow_at(e, z);
    } catch (const domain_error& e) {
      detail::rethrow_at(e, z);
    } catch (const no_convergence& e) {
      detail::rethrow_at(e, z);
    } catch (const out_of_range& e) {
      detail::rethrow_at(e, z);
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads,
                                      static_cast<unsigned>(points.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) eval_point(i);
  } else {
    // Contiguous chunks; the first failure in grid order wins.
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::size_t> failed_at(workers, points.size());
    {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (points.size() + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          const std::size_t lo = w * chunk;
          const std::size_t hi = std::min(points.size(), lo + chunk);
          for (std::size_t i = lo; i < hi; ++i) {
            try {
              eval_point(i);
            } catch (...) {
              failures[w] = std::current_exception();
              failed_at[w] = i;
              return;
            }
          }
        });
      }
    }
    for (unsigned w = 0; w < workers; ++w) {
      if (failures[w]) std::rethrow_exception(failures[w]);
    }
  }

  for (const auto& r : map.rows) {
    map.max_delta_re = std::max(map.max_delta_re, r.err.delta_re);
    map.max_delta_im = std::max(map.max_delta_im, r.err.delta_im);
  }
  return map;
}

inline void write_error_map_csv(std::ostream& os, const ErrorMap& map) {
  os << "x,y,re_approx,im_approx,re_ref,im_ref,delta_re,delta_im,"
        "fallback_re,fallback_im\n";
  for (const auto& r : map.rows) {
    os << format_sci(r.x) << ',' << format_sci(r.y) << ','
       << format_sci(r.approx.real()) << ',' << format_sci(r.approx.imag()) << ','
       << format_sci(r.reference.real()) << ','
       << format_sci(r.reference.imag()) << ',' << format_sci(r.err.delta_re)
       << ',' << format_sci(r.err.delta_im) << ',' << (r.err.fallback_re ? 1 : 0)
       << ',' << (r.err.fallback_im ? 1 : 0) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Benchmark

struct BenchReport {
  std::size_t points = 0;
  int repeats = 0;
  /// Median wall time per point over the repeats.
  double median_ns_rational = 0;
  double median_ns_reference = 0;
  /// median_ns_reference / median_ns_rational
  double speedup = 0;
  /// Sum of Re + Im over all points; identical across repeats.
  double checksum_rational = 0;
  double checksum_reference = 0;
};

/// Fixed-seed points in the upper half-plane, |x| <= 8, 0 <= y <= 8.
inline std::vector<complex> bench_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> xs(-8.0, 8.0);
  std::uniform_real_distribution<double> ys(0.0, 8.0);
  std::vector<complex> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = xs(rng);
    pts.emplace_back(x, ys(rng));
  }
  return pts;
}

inline BenchReport benchmark(std::size_t points, int repeats,
                             const CoefficientTable& table,
                             std::uint64_t seed = 20130814) {
  if (points < 10000) {
    throw std::invalid_argument("benchmark needs at least 10^4 points");
  }
  if (repeats < 3 || repeats % 2 == 0) {
    throw std::invalid_argument("benchmark repeats must be odd and >= 3");
  }
  const auto pts = bench_points(points, seed);
  using clock = std::chrono::steady_clock;

  auto run = [&](auto&& f, double& checksum) {
    double acc = 0;
    const auto t0 = clock::now();
    for (const auto& z : pts) {
      const complex v = f(z, table);
      acc += v.real() + v.imag();
    }
    const auto t1 = clock::now();
    if (checksum != acc && checksum != 0) {
      throw std::logic_error("benchmark checksum changed between repeats");
    }
    checksum = acc;
    return std::chrono::duration<double, std::nano>(t1 - t0).count() /
           static_cast<double>(points);
  };

  BenchReport r;
  r.points = points;
  r.repeats = repeats;
  std::vector<double> rational, reference;
  for (int i = 0; i < repeats; ++i) {
    rational.push_back(run(w_rational, r.checksum_rational));
    reference.push_back(run(w_reference, r.checksum_reference));
  }
  auto median = [](std::vector<double>& v) {
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
  };
  r.median_ns_rational = median(rational);
  r.median_ns_reference = median(reference);
  r.speedup = r.median_ns_reference / r.median_ns_rational;
  return r;
}

}  // namespace faddeeva::analysis

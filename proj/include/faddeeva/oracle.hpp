#pragma once

// Independent ground truth for w, erf and erfc. Two unrelated algorithms:
//
//  * adaptive quadrature of w(x + iy) = (1/sqrt(pi)) int_0^inf e^{-t^2/4} e^{-yt} e^{ixt} dt
//  * the Maclaurin series erf(z) = (2/sqrt(pi)) sum_k (-1)^k z^{2k+1} / (k! (2k+1))
//    with compensated summation.
//
// Neither shares code with the Fourier-based approximations. The series is
// preferred for |z| <= 4; quadrature covers the rest of Re z > 0 through
// erfc(z) = e^{-z^2} w(iz).

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "faddeeva/detail/compensated_sum.hpp"
#include "faddeeva/detail/complex_ops.hpp"
#include "faddeeva/detail/double_double.hpp"
#include "faddeeva/errors.hpp"
#include "faddeeva/quadrature.hpp"

namespace faddeeva::oracle {

struct QuadratureSpec {
  double abs_tol = 1e-15;
  double rel_tol = 1e-14;
  /// Upper truncation of the semi-infinite integral. The neglected tail is
  /// below e^{-t_max^2/4} / sqrt(pi).
  double t_max = 20.0;
  int max_subdivisions = 4000;
};

inline void validate(const QuadratureSpec& s) {
  if (!(s.abs_tol > 0) || !(s.rel_tol > 0)) {
    throw invalid_params("quadrature tolerances must be positive");
  }
  // e^{-17^2/4} < 1e-30
  if (!(s.t_max >= 17.0) || !std::isfinite(s.t_max)) {
    throw invalid_params("quadrature t_max must be >= 17");
  }
  if (s.max_subdivisions < 1) {
    throw invalid_params("quadrature needs max_subdivisions >= 1");
  }
}

inline constexpr double two_over_sqrt_pi = 1.1283791670955125739;
inline constexpr double one_over_sqrt_pi = 0.56418958354775628695;

/// Radius beyond which the series is refused; inside it the composite
/// evaluators prefer the series.
inline constexpr double series_max_radius = 4.0;

/// Quadrature of the integral representation of w; requires Im z > 0.
inline QuadratureResult w_oracle_detailed(std::complex<double> z,
                                          const QuadratureSpec& spec = {}) {
  detail::require_finite(z);
  validate(spec);
  if (!(z.imag() > 0)) {
    throw domain_error("w_oracle needs Im z > 0, got z = " +
                       detail::to_string(z));
  }
  const double x = z.real(), y = z.imag();
  auto integrand = [x, y](double t) {
    const double m = std::exp(-t * t / 4 - y * t);
    return std::complex<double>(m * std::cos(x * t), m * std::sin(x * t));
  };
  QuadratureResult r = integrate_adaptive(integrand, 0.0, spec.t_max,
                                          spec.abs_tol / one_over_sqrt_pi,
                                          spec.rel_tol, spec.max_subdivisions);
  r.value *= one_over_sqrt_pi;
  r.error_estimate *= one_over_sqrt_pi;
  return r;
}

inline std::complex<double> w_oracle(std::complex<double> z,
                                     const QuadratureSpec& spec = {}) {
  return w_oracle_detailed(z, spec).value;
}

/// Maclaurin series of erf, summed until the next term is below
/// 1e-18 |partial sum|. Terms and partial sums are carried in double-double
/// so the cancellation between terms of size up to ~1e5 (at |z| = 4) stays
/// far below double resolution. Refuses |z| > 4.
namespace impl {

inline faddeeva::detail::dd_complex erf_series_dd(std::complex<double> z) {
  using faddeeva::detail::dd;
  using faddeeva::detail::dd_complex;
  faddeeva::detail::require_finite(z);
  if (std::abs(z) > series_max_radius) {
    throw out_of_range("erf series oracle needs |z| <= 4, got z = " +
                       faddeeva::detail::to_string(z));
  }
  if (z == std::complex<double>(0.0, 0.0)) return {};
  const double x = z.real(), y = z.imag();
  // -z^2 = (y^2 - x^2) - 2ixy, exact in double-double
  const dd_complex minus_z_sq{faddeeva::detail::two_prod(y, y) -
                                  faddeeva::detail::two_prod(x, x),
                              -(faddeeva::detail::two_prod(x, y) * dd(2.0))};
  dd_complex power{dd(x), dd(y)};  // (-1)^k z^{2k+1} / k!
  dd_complex sum = power;
  for (int k = 1; k < 400; ++k) {
    power = (power * minus_z_sq) / static_cast<double>(k);
    const dd_complex term = power / static_cast<double>(2 * k + 1);
    sum = sum + term;
    if (abs_approx(term) < 1e-18 * abs_approx(sum)) break;
  }
  const dd two_over_sqrt_pi_dd(1.1283791670955126, 1.533545961316588e-17);
  return sum * two_over_sqrt_pi_dd;
}

}  // namespace impl

inline std::complex<double> erf_series_oracle(std::complex<double> z) {
  return faddeeva::detail::to_complex(impl::erf_series_dd(z));
}

/// 1 - erf(z) formed before rounding, so erfc keeps its relative accuracy
/// where erf is close to 1.
inline std::complex<double> erfc_series_oracle(std::complex<double> z) {
  const auto e = impl::erf_series_dd(z);
  return faddeeva::detail::to_complex({faddeeva::detail::dd(1.0) - e.re, -e.im});
}

/// erf from whichever oracle is accurate at z: the series near the origin,
/// quadrature through erfc(z) = e^{-z^2} w(iz) elsewhere in Re z > 0, and
/// erf(-z) = -erf(z) on the left.
inline std::complex<double> erf_value(std::complex<double> z,
                                      const QuadratureSpec& spec = {}) {
  detail::require_finite(z);
  if (std::abs(z) <= series_max_radius) return erf_series_oracle(z);
  if (z.real() > 0) {
    const auto erfc = detail::exp_neg_square(z) *
                      w_oracle(std::complex<double>(-z.imag(), z.real()), spec);
    return {1.0 - erfc.real(), -erfc.imag()};
  }
  if (z.real() < 0) return -erf_value(-z, spec);
  return erf_series_oracle(z);
}

inline std::complex<double> erfc_value(std::complex<double> z,
                                       const QuadratureSpec& spec = {}) {
  detail::require_finite(z);
  if (std::abs(z) <= series_max_radius) return erfc_series_oracle(z);
  if (z.real() > 0) {
    return detail::exp_neg_square(z) *
           w_oracle(std::complex<double>(-z.imag(), z.real()), spec);
  }
  if (z.real() < 0) {
    return std::complex<double>(2.0, 0.0) - erfc_value(-z, spec);
  }
  return erfc_series_oracle(z);
}

/// w anywhere the oracles reach: quadrature above the real axis,
/// w(z) = 2 e^{-z^2} - w(-z) below it, and e^{-x^2} (1 - erf(-ix)) on it.
inline std::complex<double> w_value(std::complex<double> z,
                                    const QuadratureSpec& spec = {}) {
  detail::require_finite(z);
  if (z.imag() > 0) return w_oracle(z, spec);
  if (z.imag() < 0) {
    return 2.0 * detail::exp_neg_square(z) - w_oracle(-z, spec);
  }
  const double x = z.real();
  return std::exp(-x * x) * erfc_series_oracle(std::complex<double>(0.0, -x));
}

struct CrossValidation {
  std::complex<double> series;
  std::complex<double> quadrature;
  double rel_re = 0;
  double rel_im = 0;
  /// Either component disagrees by more than 1e-12 relative.
  bool flagged = false;
};

inline constexpr double cross_validation_threshold = 1e-12;

namespace impl {
inline double component_rel(double a, double ref) {
  const double diff = std::fabs(a - ref);
  return ref != 0 ? diff / std::fabs(ref) : diff;
}
}  // namespace impl

/// Compares erf from the series with 1 - e^{-z^2} w_oracle(iz). Needs
/// |z| <= 4 for the series and Re z > 0 so that iz lies above the real axis.
inline CrossValidation cross_validate(std::complex<double> z,
                                      const QuadratureSpec& spec = {}) {
  if (!(z.real() > 0)) {
    throw domain_error("cross_validate needs Re z > 0, got z = " +
                       faddeeva::detail::to_string(z));
  }
  CrossValidation r;
  r.series = erf_series_oracle(z);
  const auto erfc = faddeeva::detail::exp_neg_square(z) *
                    w_oracle(std::complex<double>(-z.imag(), z.real()), spec);
  r.quadrature = {1.0 - erfc.real(), -erfc.imag()};
  r.rel_re = impl::component_rel(r.quadrature.real(), r.series.real());
  r.rel_im = impl::component_rel(r.quadrature.imag(), r.series.imag());
  r.flagged = r.rel_re > cross_validation_threshold ||
              r.rel_im > cross_validation_threshold;
  return r;
}

// ---------------------------------------------------------------------------
// Fixture cache: one record per line, `x y re_ref im_ref source`, decimal
// with 17 significant digits so that every double round-trips exactly.

enum class Source { series, quadrature };

struct FixtureRecord {
  double x = 0;
  double y = 0;
  double re = 0;
  double im = 0;
  Source source = Source::series;
};

inline std::string format_fixture(const FixtureRecord& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g %s", r.x, r.y, r.re,
                r.im, r.source == Source::series ? "series" : "quadrature");
  return buf;
}

inline FixtureRecord parse_fixture(const std::string& line) {
  std::istringstream is(line);
  FixtureRecord r;
  std::string source;
  if (!(is >> r.x >> r.y >> r.re >> r.im >> source)) {
    throw std::runtime_error("malformed fixture record: " + line);
  }
  if (source == "series") {
    r.source = Source::series;
  } else if (source == "quadrature") {
    r.source = Source::quadrature;
  } else {
    throw std::runtime_error("unknown fixture source '" + source + "'");
  }
  return r;
}

/// Oracle erf at z tagged with the algorithm that produced it.
inline FixtureRecord erf_fixture(std::complex<double> z,
                                 const QuadratureSpec& spec = {}) {
  const bool series = std::abs(z) <= series_max_radius;
  const auto v = erf_value(z, spec);
  return {z.real(), z.imag(), v.real(), v.imag(),
          series ? Source::series : Source::quadrature};
}

inline std::vector<FixtureRecord> read_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  std::vector<FixtureRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_fixture(line));
  }
  return out;
}

inline void write_fixtures(const std::string& path,
                           const std::vector<FixtureRecord>& records) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << "# x y re_ref im_ref source\n";
    for (const auto& r : records) out << format_fixture(r) << '\n';
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace faddeeva::oracle

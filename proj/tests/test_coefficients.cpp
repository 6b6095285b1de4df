#include <cmath>
#include <cstdint>
#include <numbers>

#include <gtest/gtest.h>

#include "faddeeva/coefficient_table.hpp"
#include "faddeeva/kernel.hpp"
#include "test_support.hpp"

using namespace faddeeva;
using test_support::ulp_distance;

namespace {

const CoefficientTable& defaults() {
  static const CoefficientTable t = build_table({});
  return t;
}

// Reference values from 40-digit arithmetic.
constexpr double a0 = 0.29540897515091933788;
constexpr double A1 = 611.77693473001808804;
constexpr double B1 = 277.41015381661634962;
constexpr double A2 = -498.07515135758198063;
constexpr double B2 = 451.70419643662201221;
constexpr double A3 = -707.12224336096972982;
constexpr double a23_over_a0 = 1.7936866768385370757e-16;

}  // namespace

TEST(Coefficients, SizesFollowTerms) {
  const auto& t = defaults();
  EXPECT_EQ(t.terms(), 23);
  EXPECT_EQ(t.a().size(), 24u);
  EXPECT_EQ(t.A().size(), 23u);
  EXPECT_EQ(t.B().size(), 23u);
  EXPECT_EQ(t.params(), make_params());
}

TEST(Coefficients, LeadingWeight) {
  EXPECT_LE(ulp_distance(defaults().a(0), a0), 2u);
}

TEST(Coefficients, FirstRationalCoefficients) {
  const auto& t = defaults();
  EXPECT_NEAR(t.A(1), A1, 1e-12 * std::fabs(A1));
  EXPECT_NEAR(t.B(1), B1, 1e-12 * std::fabs(B1));
  EXPECT_NEAR(t.A(2), A2, 1e-12 * std::fabs(A2));
  EXPECT_NEAR(t.B(2), B2, 1e-12 * std::fabs(B2));
  EXPECT_NEAR(t.A(3), A3, 1e-12 * std::fabs(A3));
}

// sin(2 * 3 * pi * 2 / 12) = sin(pi) is zero exactly, but the double pi is
// not, so B_3 comes out as a rounding residue.
TEST(Coefficients, ThirdSineCoefficientVanishes) {
  const auto& t = defaults();
  EXPECT_LE(std::fabs(t.B(3)), 1e-14 * std::fabs(t.A(3)));
}

TEST(Coefficients, MatchLongDoubleRecomputation) {
  const auto& t = defaults();
  const long double pi = std::numbers::pi_v<long double>;
  const long double tm = 12, sg = 2;
  for (int n = 1; n <= 23; ++n) {
    const long double decay = (n * pi) * (n * pi) / (tm * tm);
    const long double a = 2 * std::sqrt(pi) / tm * std::exp(-decay);
    // exp turns the few roundings in its argument into relative error
    // scaled by the argument size.
    const auto allowed = static_cast<std::uint64_t>(4 + 4 * decay);
    EXPECT_LE(ulp_distance(t.a(n), static_cast<double>(a)), allowed) << "n = " << n;
    const long double e = std::exp(sg * sg - decay);
    const long double A = 2 * tm * e * std::cos(2 * n * pi * sg / tm);
    EXPECT_NEAR(t.A(n), static_cast<double>(A), 1e-14 * 2 * 12 * std::exp(4.0))
        << "n = " << n;
  }
}

TEST(Coefficients, DecayStrictly) {
  const auto a = defaults().a();
  for (std::size_t n = 1; n < a.size(); ++n) EXPECT_LT(a[n], a[n - 1]);
  EXPECT_LT(a.back() / a.front(), 1e-15);
  EXPECT_NEAR(a.back() / a.front(), a23_over_a0, 1e-12 * a23_over_a0);
}

TEST(Coefficients, InvalidParams) {
  EXPECT_THROW(build_table({0, 12, 2}), invalid_params);
  EXPECT_THROW(build_table({23, 0, 2}), invalid_params);
  EXPECT_THROW(build_table({23, -1, 2}), invalid_params);
  EXPECT_THROW(build_table({23, 12, 0}), invalid_params);
  EXPECT_THROW(build_table({23, 12, std::nan("")}), invalid_params);
  EXPECT_THROW(make_params(23, INFINITY, 2), invalid_params);
}

TEST(Coefficients, TableIsSharedByCopy) {
  const CoefficientTable copy = defaults();
  EXPECT_EQ(copy.A(5), defaults().A(5));
}

TEST(Kernel, PeakIsOne) {
  EXPECT_NEAR(exp_kernel_approx(0, 0, defaults()).value, 1.0, 1e-13);
}

TEST(Kernel, ShiftMovesPeak) {
  const auto k = exp_kernel_approx(4, 2, defaults());
  EXPECT_NEAR(k.value, 1.0, 1e-13);
  EXPECT_FALSE(k.outside_window);
}

TEST(Kernel, MatchesGaussianAtTwo) {
  EXPECT_NEAR(exp_kernel_approx(2, 0, defaults()).value, 0.3678794411714423216,
              1e-13);
}

TEST(Kernel, FlagsOutsideWindow) {
  EXPECT_FALSE(exp_kernel_approx(12, 0, defaults()).outside_window);
  EXPECT_TRUE(exp_kernel_approx(12.5, 0, defaults()).outside_window);
  EXPECT_TRUE(exp_kernel_approx(-9, 2, defaults()).outside_window);
}

TEST(Kernel, ConvergesOverSixSigma) {
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const double t = -6 + 12.0 * i / 9999;
    worst = std::max(worst, std::fabs(std::exp(-t * t / 4) -
                                      exp_kernel_approx(t, 0, defaults()).value));
  }
  EXPECT_LE(worst, 1e-13);
}

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "logbessel/errors.hpp"
#include "logbessel/scalar_kernels.hpp"
#include "oracles.hpp"

using namespace logbessel;

namespace {

constexpr double kE = std::numbers::e;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double ulp(double x) {
  x = std::abs(x);
  return std::nextafter(x, std::numeric_limits<double>::infinity()) - x;
}

std::vector<double> w_grid() {
  std::vector<double> g;
  const double branch = -std::exp(-1.0);
  for (int i = 0; i <= 200; ++i) g.push_back(branch + (0.0 - branch) * std::pow(i / 200.0, 3.0));
  for (int i = 1; i <= 400; ++i) g.push_back(std::pow(10.0, -12.0 + 21.0 * i / 400.0));
  return g;
}

}  // namespace

TEST(LambertW0, Anchors) {
  EXPECT_EQ(lambert_w0(0.0), 0.0);
  EXPECT_NEAR(lambert_w0(kE), 1.0, 2 * kEps);
  EXPECT_NEAR(lambert_w0(1.0), static_cast<double>(oracle::lambert_w0_bisect(1.0L)), 2 * kEps);
  EXPECT_EQ(lambert_w0(-std::exp(-1.0)), -1.0);
}

TEST(LambertW0, RejectsBelowBranchPoint) {
  EXPECT_THROW(lambert_w0(-0.37), DomainError);
  EXPECT_THROW(lambert_w0(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(LambertW0, BackwardResidual) {
  for (double x : w_grid()) {
    const long double w = lambert_w0(x);
    EXPECT_GE(w, -1.0L);
    if (x <= kE) {
      const long double r = w * std::exp(w) - static_cast<long double>(x);
      EXPECT_LE(std::fabs(r), 4.0L * ulp(std::max(std::abs(x), std::numeric_limits<double>::min()))) << "x=" << x;
    } else {
      const long double lx = std::log(static_cast<long double>(x));
      const long double r = w + std::log(w) - lx;
      EXPECT_LE(std::fabs(r), 4.0L * ulp(static_cast<double>(lx))) << "x=" << x;
    }
  }
}

TEST(LambertW0, ForwardErrorAwayFromBranchPoint) {
  for (double x : w_grid()) {
    if (x < -std::exp(-1.0) + 1e-3) continue;
    const double w = lambert_w0(x);
    const double ref = static_cast<double>(oracle::lambert_w0_bisect(x));
    EXPECT_LE(std::abs(w - ref), 2.0 * ulp(ref) + 1e-300) << "x=" << x;
  }
}

TEST(LambertW0, FromLogMatchesDirectAndExtendsRange) {
  for (double x : {0.5, 3.0, 1e3, 1e100, 1e300}) {
    EXPECT_NEAR(lambert_w0_from_log(std::log(x)), lambert_w0(x), 4 * ulp(lambert_w0(x)));
  }
  // W0(e^1000): w + log w = 1000.
  const double w = lambert_w0_from_log(1000.0);
  EXPECT_NEAR(w + std::log(w), 1000.0, 4 * ulp(1000.0));
  EXPECT_NEAR(w, static_cast<double>(oracle::lambert_w0_bisect(std::exp(1000.0L))), 4 * ulp(w));
}

TEST(HoorfarHassani, Anchors) {
  EXPECT_NEAR(w0_upper_bound_hh(kE), 1.0, 4 * kEps);
  EXPECT_NEAR(w0_lower_bound_hh(kE), 1.0, 4 * kEps);
  const double ee = std::exp(kE);
  EXPECT_NEAR(w0_upper_bound_hh(ee), kE - 1.0 + (kE / (kE - 1.0)) / kE, 1e-14);
  EXPECT_NEAR(w0_upper_bound_hh(ee), 2.300, 1e-3);
  EXPECT_NEAR(w0_lower_bound_hh(ee), kE - 1.0 + 0.5 / kE, 1e-14);
  EXPECT_LE(w0_lower_bound_hh(100.0), static_cast<double>(oracle::lambert_w0_bisect(100.0L)));
  EXPECT_GE(w0_upper_bound_hh(1e6), static_cast<double>(oracle::lambert_w0_bisect(1e6L)));
}

TEST(HoorfarHassani, RejectsBelowE) {
  EXPECT_THROW(w0_upper_bound_hh(2.0), DomainError);
  EXPECT_THROW(w0_lower_bound_hh(2.0), DomainError);
  EXPECT_THROW(w0_upper_bound_hh_from_log(0.5), DomainError);
}

TEST(HoorfarHassani, BracketsW0) {
  for (int i = 0; i <= 400; ++i) {
    const double log_x = 1.0 + 700.0 * std::pow(i / 400.0, 2.0);
    const double w = static_cast<double>(oracle::lambert_w0_bisect(std::exp(static_cast<long double>(log_x))));
    EXPECT_LE(w0_lower_bound_hh_from_log(log_x), w * (1 + 4 * kEps)) << log_x;
    EXPECT_GE(w0_upper_bound_hh_from_log(log_x), w * (1 - 4 * kEps)) << log_x;
  }
}

TEST(LogGamma, Anchors) {
  EXPECT_EQ(log_gamma(1.0), 0.0);
  EXPECT_EQ(log_gamma(2.0), 0.0);
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 2 * kEps);
  EXPECT_THROW(log_gamma(0.0), DomainError);
  EXPECT_THROW(log_gamma(-1.5), DomainError);
}

TEST(LogGamma, AgreesWithLongDoubleLgamma) {
  std::vector<double> xs;
  for (int i = 1; i <= 2000; ++i) xs.push_back(std::pow(10.0, -6.0 + 12.0 * i / 2000.0));
  for (int i = 1; i <= 400; ++i) xs.push_back(i * 0.05);
  for (double x : xs) {
    const double ref = static_cast<double>(std::lgamma(static_cast<long double>(x)));
    // Near the zeros at 1 and 2 the tolerance is absolute.
    EXPECT_LE(std::abs(log_gamma(x) - ref), 4.0 * ulp(std::max(std::abs(ref), 1.0))) << "x=" << x;
  }
}

TEST(KaratsubaBounds, Anchors) {
  for (double x : {1.0, 5.0}) {
    const GammaBounds b = karatsuba_gamma_bounds(x);
    const double g = std::tgamma(1.0 + x);
    EXPECT_LT(b.lo(), g);
    EXPECT_GT(b.hi(), g);
  }
  const GammaBounds b = karatsuba_gamma_bounds(100.5);
  const double ref = static_cast<double>(std::lgamma(101.5L));
  EXPECT_LT(b.log_lo, ref);
  EXPECT_GT(b.log_hi, ref);
  EXPECT_THROW(karatsuba_gamma_bounds(0.0), DomainError);
}

TEST(KaratsubaBounds, BracketLogGamma) {
  for (int i = 1; i <= 400; ++i) {
    const double x = 170.0 * std::pow(i / 400.0, 2.0);
    const GammaBounds b = karatsuba_gamma_bounds(x);
    const double lg = log_gamma(1.0 + x);
    EXPECT_LT(b.log_lo, lg) << x;
    EXPECT_GT(b.log_hi, lg) << x;
  }
  const GammaBounds b = karatsuba_gamma_bounds(170.5);
  EXPECT_LT(b.log_lo, log_gamma(171.5));
  EXPECT_GT(b.log_hi, log_gamma(171.5));
}

TEST(YangChu, Coefficients) {
  const YangChuCoefficients c32 = yang_chu_coefficients(1.5);
  EXPECT_NEAR(c32.c0, 1.0, 4 * kEps);
  EXPECT_NEAR(c32.a1, 1.0, 4 * kEps);
  EXPECT_NEAR(c32.b1, 1.0, 4 * kEps);
  EXPECT_NEAR(c32.a2, 1.0, 4 * kEps);
  EXPECT_NEAR(c32.b2, 1.0, 4 * kEps);

  const YangChuCoefficients c1 = yang_chu_coefficients(1.0);
  EXPECT_NEAR(c1.c0, 2.0 / std::numbers::pi, 4 * kEps);
  EXPECT_NEAR(c1.a1, 2.0 / std::numbers::pi, 4 * kEps);
  EXPECT_NEAR(c1.b1, 0.75, 4 * kEps);
  EXPECT_NEAR(c1.a2, std::numbers::pi / 2.0, 8 * kEps);
  EXPECT_NEAR(c1.b2, 2.0, 8 * kEps);

  EXPECT_NEAR(yang_chu_coefficients(2.0).c0, 2.0 * std::pow(std::numbers::pi, -1.0 / 3.0), 8 * kEps);
  EXPECT_THROW(yang_chu_coefficients(0.9), DomainError);
}

TEST(YangChu, CoefficientOrderingAndC0Bracket) {
  for (int i = 0; i <= 400; ++i) {
    const double nu = 1.0 + 499.0 * i / 400.0;
    const YangChuCoefficients c = yang_chu_coefficients(nu);
    EXPECT_LE(c.a1, c.b1);
    EXPECT_LE(c.a2, c.b2);
    const double hi = 2.0 * nu / kE;
    const double lo = hi * std::pow(2.0 / kE, 1.0 / (2.0 * nu - 1.0));
    EXPECT_LT(lo, c.c0) << nu;
    EXPECT_LT(c.c0, hi) << nu;
  }
}

#include "logbessel/scalar_kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "logbessel/errors.hpp"

namespace logbessel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kE = std::numbers::e;
// e = kEHi + kELo to about 2^-106.
constexpr double kEHi = 2.718281828459045;
constexpr double kELo = 1.4456468917292502e-16;
constexpr double kHHUpperCoeff = std::numbers::e / (std::numbers::e - 1.0);
constexpr int kMaxHalley = 64;

// Halley iteration on w e^w - x for -1/e <= x <= e. q = 1 + e x.
// The residual cancels near the branch point, so it is formed in long double.
double halley_w0(double x, double q) {
  using ld = long double;
  ld w;
  if (q < 0.5) {
    // Branch-point series in p = sqrt(2(1 + e x)).
    const ld p = std::sqrt(2.0L * q);
    w = -1.0L + p * (1.0L + p * (-1.0L / 3.0L + p * (11.0L / 72.0L + p * (-43.0L / 540.0L + p * (769.0L / 17280.0L)))));
  } else {
    w = std::log1p(static_cast<ld>(x));
  }
  const ld xl = x;
  for (int i = 0; i < kMaxHalley; ++i) {
    const ld ew = std::exp(w);
    const ld f = w * ew - xl;
    const ld wp1 = w + 1.0L;
    if (f == 0.0L || wp1 == 0.0L) break;
    const ld dw = f / (ew * wp1 - (w + 2.0L) * f / (2.0L * wp1));
    w -= dw;
    if (std::fabs(dw) <= std::numeric_limits<ld>::epsilon() * std::fabs(w)) break;
  }
  return std::max(static_cast<double>(w), -1.0);
}

double check_hh_log_argument(double log_x, const char* name) {
  // Allow log(e) to round a hair below 1.
  if (!(log_x >= 1.0 - 4.0 * kEps)) {
    throw DomainError(std::string(name) + ": requires x >= e");
  }
  return std::max(log_x, 1.0);
}

}  // namespace

double lambert_w0(double x) {
  if (std::isnan(x)) throw DomainError("lambert_w0: NaN argument");
  if (x == std::numeric_limits<double>::infinity()) return x;
  const double q = std::fma(kEHi, x, 1.0) + kELo * x;
  if (q <= 0.0) {
    if (q > -8.0 * kEps) return -1.0;
    throw DomainError("lambert_w0: argument below -1/e");
  }
  if (x == 0.0) return 0.0;
  if (x > kE) return lambert_w0_from_log(std::log(x));
  return halley_w0(x, q);
}

double lambert_w0_from_log(double log_x) {
  if (std::isnan(log_x)) throw DomainError("lambert_w0_from_log: NaN argument");
  if (log_x == std::numeric_limits<double>::infinity()) return log_x;
  if (log_x <= 1.0) {
    const double x = std::exp(log_x);
    return halley_w0(x, std::fma(kEHi, x, 1.0) + kELo * x);
  }
  // Solve w + log w = log x, seeded by the Hoorfar-Hassani upper bound.
  const double ll = std::log(log_x);
  double w = log_x - ll + kHHUpperCoeff * ll / log_x;
  for (int i = 0; i < kMaxHalley; ++i) {
    const double g = w + std::log(w) - log_x;
    const double gp = 1.0 + 1.0 / w;
    const double gpp = -1.0 / (w * w);
    const double dw = (g / gp) / (1.0 - g * gpp / (2.0 * gp * gp));
    w -= dw;
    if (std::abs(dw) <= 2.0 * kEps * w) break;
  }
  return w;
}

double w0_upper_bound_hh_from_log(double log_x) {
  const double l = check_hh_log_argument(log_x, "w0_upper_bound_hh");
  const double ll = std::log(l);
  return l - ll + kHHUpperCoeff * ll / l;
}

double w0_lower_bound_hh_from_log(double log_x) {
  const double l = check_hh_log_argument(log_x, "w0_lower_bound_hh");
  const double ll = std::log(l);
  return l - ll + 0.5 * ll / l;
}

double w0_upper_bound_hh(double x) {
  if (!(x > 0.0)) throw DomainError("w0_upper_bound_hh: requires x >= e");
  return w0_upper_bound_hh_from_log(std::log(x));
}

double w0_lower_bound_hh(double x) {
  if (!(x > 0.0)) throw DomainError("w0_lower_bound_hh: requires x >= e");
  return w0_lower_bound_hh_from_log(std::log(x));
}

GammaBounds karatsuba_gamma_bounds(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("karatsuba_gamma_bounds: requires x > 0");
  const double head = 0.5 * std::log(std::numbers::pi) + x * (std::log(x) - 1.0);
  const double poly = ((8.0 * x + 4.0) * x + 1.0) * x;
  return {head + std::log(poly + 1.0 / 100.0) / 6.0, head + std::log(poly + 1.0 / 30.0) / 6.0};
}

namespace {

// zeta(k) - 1 for k = 2..40.
constexpr std::array<double, 39> kZetaMinusOne = {
    0.64493406684822643647,   0.2020569031595942854,    0.082323233711138191516,
    0.036927755143369926331,  0.017343061984449139715,  0.0083492773819228268398,
    0.0040773561979443393787, 0.0020083928260822144179, 0.00099457512781808533715,
    0.0004941886041194645587, 0.00024608655330804829864, 0.00012271334757848914675,
    6.1248135058704829259e-5, 3.0588236307020493552e-5, 1.5282259408651871733e-5,
    7.6371976378997622736e-6, 3.8172932649998398565e-6, 1.9082127165539389257e-6,
    9.5396203387279611315e-7, 4.7693298678780646312e-7, 2.3845050272773299e-7,
    1.1921992596531107307e-7, 5.9608189051259479612e-8, 2.9803503514652280186e-8,
    1.4901554828365041235e-8, 7.450711789835429492e-9,  3.7253340247884570548e-9,
    1.8626597235130490064e-9, 9.3132743241966818287e-10, 4.656629065033784073e-10,
    2.328311833676505492e-10, 1.1641550172700519776e-10, 5.8207720879027008892e-11,
    2.9103850444970996869e-11, 1.4551921891041984236e-11, 7.2759598350574810145e-12,
    3.6379795473786511902e-12, 1.8189896503070659476e-12, 9.0949478402638892825e-13,
};

constexpr double kEulerGamma = std::numbers::egamma;

// log Gamma(2 + y) for |y| <= 1/2:
//   (1 - gamma) y + sum_{k>=2} (-1)^k (zeta(k) - 1) y^k / k
double log_gamma_2p(double y) {
  double acc = 0.0;
  for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
    const double k = static_cast<double>(i + 2);
    const double coeff = ((i % 2 == 0) ? 1.0 : -1.0) * kZetaMinusOne[i] / k;
    acc = acc * y + coeff;
  }
  return y * ((1.0 - kEulerGamma) + acc * y);
}

// B_{2k} / (2k (2k - 1))
constexpr std::array<double, 9> kStirling = {
    0.083333333333333333333,  -0.0027777777777777777778, 0.00079365079365079365079,
    -0.0005952380952380952381, 0.00084175084175084175084, -0.0019175269175269175269,
    0.0064102564102564102564, -0.02955065359477124183,   0.17964437236883057316,
};

constexpr double kStirlingThreshold = 13.0;

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: requires x > 0");
  if (std::isinf(x)) return x;
  if (x < 0.5) {
    // Gamma(x) = Gamma(1 + x) / x, and Gamma(1 + x) = Gamma(2 + x) / (1 + x).
    return log_gamma_2p(x) - std::log1p(x) - std::log(x);
  }
  if (x < 1.5) return log_gamma_2p(x - 1.0) - std::log1p(x - 1.0);
  if (x <= 2.5) return log_gamma_2p(x - 2.0);
  if (x < kStirlingThreshold) {
    double prod = 1.0;
    double y = x;
    while (y > 2.5) {
      y -= 1.0;
      prod *= y;
    }
    return log_gamma_2p(y - 2.0) + std::log(prod);
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  for (std::size_t i = kStirling.size(); i-- > 0;) series = series * inv2 + kStirling[i];
  constexpr double kHalfLog2Pi = 0.91893853320467274178;
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series * inv;
}

YangChuCoefficients yang_chu_coefficients(double nu) {
  if (!(nu >= 1.0) || !std::isfinite(nu)) throw DomainError("yang_chu_coefficients: requires nu >= 1");
  const double log_ratio = log_gamma(nu) - 0.5 * std::log(std::numbers::pi);
  const double c0 = 2.0 * std::exp(2.0 * log_ratio / (2.0 * nu - 1.0));
  const double m1 = 0.5 * nu + 0.25;
  const double m2 = nu - 0.5;
  return {nu, c0, std::min(c0, m1), std::max(c0, m1), 1.0 / std::max(c0, m2), 1.0 / std::min(c0, m2)};
}

YangChuLogBounds yang_chu_log_bounds(const YangChuCoefficients& c, double z) {
  if (!(z > 0.0)) throw DomainError("yang_chu_log_bounds: requires z > 0");
  const double e = c.nu - 0.5;
  const double log_k_half = 0.5 * std::log(std::numbers::pi / (2.0 * z)) - z;
  const double small_base = log_gamma(c.nu) - std::numbers::ln2 + c.nu * std::log(2.0 / z) - z;
  return {log_k_half + e * std::log1p(c.a1 / z), log_k_half + e * std::log1p(c.b1 / z),
          small_base + e * std::log1p(c.a2 * z), small_base + e * std::log1p(c.b2 * z)};
}

}  // namespace logbessel

#include "logbessel/bessel_base.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "logbessel/errors.hpp"

namespace logbessel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Taylor coefficients of 1/Gamma(1 + x) about 0.
constexpr std::array<double, 31> kRecipGamma1p = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -2.0134854780788238656e-5,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
    -2.2987456844353702066e-19,
    1.7144063219273374334e-20,
    1.3373517304936931149e-22,
};

// gamma1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), gamma2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2,
// evaluated from the even and odd parts of the series without cancellation.
struct TemmeGammas {
  double gam1;
  double gam2;
  double gampl;  // 1/Gamma(1+mu)
  double gammi;  // 1/Gamma(1-mu)
};

TemmeGammas temme_gammas(double mu) {
  const double mu2 = mu * mu;
  double even = 0.0;
  double odd = 0.0;
  for (std::size_t k = kRecipGamma1p.size(); k-- > 0;) {
    if (k % 2 == 0) {
      even = even * mu2 + kRecipGamma1p[k];
    } else {
      odd = odd * mu2 + kRecipGamma1p[k];
    }
  }
  return {-odd, even, even + mu * odd, even - mu * odd};
}

void check_seed_order(double mu, const char* who) {
  if (!(std::abs(mu) <= 0.5)) throw DomainError(std::string(who) + ": requires |mu| <= 1/2");
}

}  // namespace

namespace detail {

LogPair temme_series(double mu, double z) {
  check_seed_order(mu, "temme_series");
  if (!(z > 0.0)) throw DomainError("temme_series: requires z > 0");

  const double x2 = 0.5 * z;
  const double pimu = std::numbers::pi * mu;
  const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
  const double d = -std::log(x2);
  const double e = mu * d;
  const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
  const TemmeGammas g = temme_gammas(mu);

  double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
  double sum = ff;
  const double ee = std::exp(e);
  double p = 0.5 * ee / g.gampl;
  double q = 0.5 / (ee * g.gammi);
  double c = 1.0;
  const double dd = x2 * x2;
  double sum1 = p;
  const double mu2 = mu * mu;

  int i = 1;
  for (; i <= kMaxContinuedFractionIterations; ++i) {
    const double di = static_cast<double>(i);
    ff = (di * ff + p + q) / (di * di - mu2);
    c *= dd / di;
    p /= (di - mu);
    q /= (di + mu);
    const double del = c * ff;
    sum += del;
    const double del1 = c * (p - di * ff);
    sum1 += del1;
    if (std::abs(del) < std::abs(sum) * kEps && std::abs(del1) < std::abs(sum1) * kEps) break;
  }
  if (i > kMaxContinuedFractionIterations) {
    throw ConvergenceError("temme_series: no convergence", i);
  }
  return {std::log(sum), std::log(sum1) + std::log(2.0 / z)};
}

LogPair steed_cf2(double mu, double z) {
  check_seed_order(mu, "steed_cf2");
  if (!(z > 0.0)) throw DomainError("steed_cf2: requires z > 0");

  double b = 2.0 * (1.0 + z);
  double d = 1.0 / b;
  double delh = d;
  double h = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;

  int i = 1;
  for (; i <= kMaxContinuedFractionIterations; ++i) {
    const double di = static_cast<double>(i);
    a -= 2.0 * di;
    c = -a * c / (di + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels) < std::abs(s) * kEps && std::abs(delh) < std::abs(h) * kEps) break;
  }
  if (i > kMaxContinuedFractionIterations) {
    throw ConvergenceError("steed_cf2: no convergence", i);
  }
  h *= a1;
  const double log_k0 = 0.5 * std::log(std::numbers::pi / (2.0 * z)) - std::log(s);
  return {log_k0, log_k0 + std::log((mu + z + 0.5 - h) / z)};
}

}  // namespace detail

ScaledSeedPair scaled_seed(double nu0, double z) {
  if (!(nu0 >= 0.0 && nu0 <= 1.0)) throw DomainError("scaled_seed: requires 0 <= nu0 <= 1");
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("scaled_seed: requires finite z > 0");

  auto scaled_pair = [z](double mu) -> detail::LogPair {
    if (z <= kSeedSwitch) {
      const auto p = detail::temme_series(mu, z);
      return {p.first + z, p.second + z};
    }
    return detail::steed_cf2(mu, z);
  };

  if (nu0 <= 0.5) {
    const auto p = scaled_pair(nu0);
    return {nu0, z, p.first, p.second};
  }
  // K~_{nu0+1} = K~_{nu0-1} + (2 nu0 / z) K~_{nu0}
  const auto p = scaled_pair(nu0 - 1.0);
  const double log_coef = std::log(2.0 * nu0 / z);
  const double log_kt1 = p.second + log_coef + std::log1p(std::exp(p.first - p.second - log_coef));
  return {nu0, z, p.second, log_kt1};
}

double ratio_cf(double nu, double z) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("ratio_cf: requires nu >= 0");
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("ratio_cf: requires finite z > 0");

  if (z < kRatioCfMinArgument) {
    // The fraction needs O(1/z) terms here; start from the series seed instead.
    const double n = std::floor(nu);
    const double base = nu - n;
    const ScaledSeedPair seed = scaled_seed(base, z);
    double r = std::exp(seed.log_kt1 - seed.log_kt0);
    for (double i = 1.0; i <= n; i += 1.0) r = 1.0 / r + 2.0 * (base + i) / z;
    return r;
  }

  double f = kLentzTiny;
  double c = f;
  double d = 0.0;
  int j = 1;
  for (; j <= kMaxContinuedFractionIterations; ++j) {
    const double dj = static_cast<double>(j);
    const double a = j == 1 ? 1.0 : (nu - dj + 0.5) * (nu + dj - 0.5);
    const double b = 2.0 * (dj + z);
    d = b + a * d;
    if (std::abs(d) < kLentzTiny) d = kLentzTiny;
    c = b + a / c;
    if (std::abs(c) < kLentzTiny) c = kLentzTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  if (j > kMaxContinuedFractionIterations) {
    throw ConvergenceError("ratio_cf: no convergence after " + std::to_string(j - 1) + " iterations",
                           j - 1);
  }
  return (nu + 0.5 + z + (nu - 0.5) * (nu + 0.5) * f) / z;
}

namespace {

double forward_linear(double nu, double z, double shift) {
  nu = std::abs(nu);
  if (!std::isfinite(nu)) throw DomainError("conventional_bessel_k: order must be finite");
  const double n = std::floor(nu);
  const double base = nu - n;
  const ScaledSeedPair seed = scaled_seed(base, z);
  double k0 = std::exp(seed.log_kt0 - shift);
  if (n == 0.0) return k0;
  double k1 = std::exp(seed.log_kt1 - shift);
  for (double i = 1.0; i < n; i += 1.0) {
    const double k2 = k0 + (2.0 * (base + i) / z) * k1;
    k0 = k1;
    k1 = k2;
  }
  return k1;
}

}  // namespace

double conventional_bessel_k_scaled(double nu, double z) { return forward_linear(nu, z, 0.0); }

double conventional_bessel_k(double nu, double z) { return forward_linear(nu, z, z); }

}  // namespace logbessel

#include "logbessel/logk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "logbessel/bessel_base.hpp"
#include "logbessel/errors.hpp"
#include "logbessel/range_analysis.hpp"

namespace logbessel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_arguments(double nu, double z, const char* who) {
  if (!std::isfinite(nu)) throw DomainError(std::string(who) + ": order must be finite");
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError(std::string(who) + ": requires finite z > 0");
}

struct Lattice {
  double base;  // in [0, 1)
  long steps;   // nu = base + steps
};

Lattice split_order(double nu) {
  const double n = std::floor(nu);
  return {nu - n, static_cast<long>(n)};
}

// Scaled logs s_m = log K~_m(z) of the pair at order |nu|. Ratio recurrence
// while s_m <= z (log K_m <= 0), log recurrence afterwards.
LogBesselValue scaled_log_pair(double nu, double z) {
  nu = std::abs(nu);
  const Lattice lat = split_order(nu);
  const ScaledSeedPair seed = scaled_seed(lat.base, z);
  double s0 = seed.log_kt0;
  double s1 = seed.log_kt1;
  long k = 0;

  if (lat.steps > 0 && s0 <= z) {
    double r = std::exp(s1 - s0);
    while (k < lat.steps && s0 <= z) {
      const double m = lat.base + static_cast<double>(k);
      r = 1.0 / r + 2.0 * (m + 1.0) / z;
      s0 = s1;
      s1 += std::log(r);
      ++k;
    }
  }
  for (; k < lat.steps; ++k) {
    const double m = lat.base + static_cast<double>(k);
    const double s2 = log_recurrence_step(m + 1.0, z, s0, s1);
    s0 = s1;
    s1 = s2;
  }
  return {nu, z, s0, s1};
}

}  // namespace

double log_recurrence_step(double nu, double z, double u_prev, double u_cur) {
  const double t = (2.0 * nu / z) * std::exp(u_cur - u_prev);
  if (std::isfinite(t)) return u_prev + std::log1p(t);
  // (2 nu / z) e^(u_cur - u_prev) overflows: log1p(t) = log t + log1p(1/t).
  const double log_t = std::log(2.0 * nu) - std::log(z) + (u_cur - u_prev);
  return u_prev + log_t + std::log1p(std::exp(-log_t));
}

LogBesselValue advance_log_recursion(LogBesselValue v, long steps) {
  for (long i = 0; i < steps; ++i) {
    const double next = log_recurrence_step(v.nu + 1.0, v.z, v.u, v.u_next);
    v.u = v.u_next;
    v.u_next = next;
    v.nu += 1.0;
  }
  return v;
}

LogBesselValue log_k_pair(double nu, double z) {
  check_arguments(nu, z, "log_k");
  LogBesselValue v = scaled_log_pair(nu, z);
  v.u -= z;
  v.u_next -= z;
  return v;
}

double log_k(double nu, double z) { return log_k_pair(nu, z).u; }

double log_k_scaled(double nu, double z) {
  check_arguments(nu, z, "log_k_scaled");
  return scaled_log_pair(nu, z).u;
}

Nu0Selection select_nu0(double nu, double z) {
  check_arguments(nu, z, "select_nu0");
  if (nu < 0.0) throw DomainError("select_nu0: requires nu >= 0");
  const Lattice lat = split_order(nu);

  // With B = 1 the overflow thresholds bracket the order where log K crosses 0.
  const double certified_positive = std::max(overflow_necessary_threshold(1.0, z), 1.0);
  const double certified_non_positive = overflow_sufficient_threshold(1.0, z);
  if (nu <= certified_non_positive && nu >= kOverflowSufficientMinOrder) {
    return {true, nu, lat.steps};
  }
  const long cap = nu >= certified_positive
                       ? std::min(lat.steps, static_cast<long>(std::ceil(certified_positive - lat.base)))
                       : lat.steps;

  const ScaledSeedPair seed = scaled_seed(lat.base, z);
  double s0 = seed.log_kt0;
  double r = std::exp(seed.log_kt1 - seed.log_kt0);
  long k = 0;
  while (s0 <= z && k < cap) {
    const double m = lat.base + static_cast<double>(k);
    s0 += std::log(r);
    r = 1.0 / r + 2.0 * (m + 1.0) / z;
    ++k;
  }
  if (s0 <= z) {
    if (k == lat.steps) return {true, nu, lat.steps};
    // The analytic cap was reached without a sign change; keep walking.
    while (s0 <= z && k < lat.steps) {
      const double m = lat.base + static_cast<double>(k);
      s0 += std::log(r);
      r = 1.0 / r + 2.0 * (m + 1.0) / z;
      ++k;
    }
    if (s0 <= z) return {true, nu, lat.steps};
  }
  return {false, lat.base + static_cast<double>(k), k};
}

double log_k_sum_of_ratios(double nu, double z) {
  check_arguments(nu, z, "log_k_sum_of_ratios");
  nu = std::abs(nu);
  const Lattice lat = split_order(nu);
  double s = scaled_seed(lat.base, z).log_kt0;
  if (lat.steps == 0) return s - z;
  double r = ratio_cf(lat.base, z);
  s += std::log(r);
  for (long k = 1; k < lat.steps; ++k) {
    r = 1.0 / r + 2.0 * (lat.base + static_cast<double>(k)) / z;
    s += std::log(r);
  }
  return s - z;
}

double i_ratio_cf(double nu, double z) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("i_ratio_cf: requires nu >= 0");
  check_arguments(nu, z, "i_ratio_cf");
  double f = kLentzTiny;
  double c = f;
  double d = 0.0;
  int j = 1;
  for (; j <= kMaxContinuedFractionIterations; ++j) {
    const double b = 2.0 * (nu + static_cast<double>(j)) / z;
    d = b + d;
    if (std::abs(d) < kLentzTiny) d = kLentzTiny;
    c = b + 1.0 / c;
    if (std::abs(c) < kLentzTiny) c = kLentzTiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  if (j > kMaxContinuedFractionIterations) {
    throw ConvergenceError("i_ratio_cf: no convergence after " + std::to_string(j - 1) + " iterations",
                           j - 1);
  }
  return f;
}

double log_i(double nu, double z) {
  check_arguments(nu, z, "log_i");
  if (nu < 0.0) throw DomainError("log_i: requires nu >= 0");
  const LogBesselValue k = log_k_pair(nu, z);
  const double log_rk = k.u_next - k.u;
  const double ri = i_ratio_cf(nu, z);
  return -std::log(z) - k.u - log_rk - std::log1p(ri * std::exp(-log_rk));
}

}  // namespace logbessel

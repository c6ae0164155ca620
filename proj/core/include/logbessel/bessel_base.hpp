#pragma once

#include <cmath>

namespace logbessel {

/// Exponentially scaled pair K~_{nu0}(z), K~_{nu0+1}(z) with K~_nu(z) = e^z K_nu(z).
///
/// Values are carried as logarithms: for tiny z the second member exceeds the
/// double range long before the recursion needs it.
struct ScaledSeedPair {
  double nu0;
  double z;
  double log_kt0;
  double log_kt1;

  double kt0() const { return std::exp(log_kt0); }
  double kt1() const { return std::exp(log_kt1); }
};

/// Crossover between the Temme series and the Steed continued fraction.
inline constexpr double kSeedSwitch = 2.0;

/// Seed pair for 0 <= nu0 <= 1 and z > 0. Orders above 1/2 are reached from
/// nu0 - 1 by one application of the three-term recurrence.
ScaledSeedPair scaled_seed(double nu0, double z);

/// K_{nu+1}(z) / K_nu(z) by the continued fraction
///   (1/z) [nu + 1/2 + z + (nu^2 - 1/4) / (b1 + a2 / (b2 + ...))],
///   a_{n+1} = nu^2 - (n + 1/2)^2,  b_n = 2 (n + z),
/// evaluated with the modified Lentz scheme. Throws ConvergenceError after
/// kMaxContinuedFractionIterations. Below kRatioCfMinArgument the fraction
/// needs roughly 80/z terms and accumulates rounding, so the ratio comes from the series seed pair and
/// the forward ratio recurrence instead.
double ratio_cf(double nu, double z);

inline constexpr double kRatioCfMinArgument = 0.1;

inline constexpr int kMaxContinuedFractionIterations = 10000;
inline constexpr double kLentzTiny = 1e-30;

/// K~_nu(z) computed the way general-purpose libraries do it: seed pair plus
/// forward recurrence in linear space. Saturates to +inf once the value leaves
/// the double range. Used as the non-logarithmic baseline.
double conventional_bessel_k_scaled(double nu, double z);

/// e^-z times the above; overflows and underflows like a library K_nu.
double conventional_bessel_k(double nu, double z);

namespace detail {

/// Unscaled log K_mu(z), log K_{mu+1}(z) for |mu| <= 1/2 by Temme's series.
struct LogPair {
  double first;
  double second;
};

LogPair temme_series(double mu, double z);

/// Scaled log K~_mu(z), log K~_{mu+1}(z) for |mu| <= 1/2 by Steed's method
/// on the second continued fraction.
LogPair steed_cf2(double mu, double z);

}  // namespace detail

}  // namespace logbessel

#pragma once

#include <cmath>

namespace logbessel {

// ---------------------------------------------------------------------------
// Lambert W, principal branch
// ---------------------------------------------------------------------------

/// W0(x) for x >= -1/e. Halley iteration; arguments within a few ulps below
/// the branch point are snapped to -1.
double lambert_w0(double x);

/// W0(exp(log_x)). Used where x itself would overflow, e.g. thresholds whose
/// argument exceeds the overflow level of the analyzed system.
double lambert_w0_from_log(double log_x);

/// Hoorfar-Hassani upper bound on W0(x), valid for x >= e:
///   log x - log log x + e/(e-1) * log log x / log x
double w0_upper_bound_hh(double x);
double w0_upper_bound_hh_from_log(double log_x);

/// Matching lower bound with coefficient 1/2 in place of e/(e-1).
double w0_lower_bound_hh(double x);
double w0_lower_bound_hh_from_log(double log_x);

// ---------------------------------------------------------------------------
// Gamma function
// ---------------------------------------------------------------------------

/// Karatsuba bracket on Gamma(1+x), returned in log space:
///   sqrt(pi) (x/e)^x (8x^3 + 4x^2 + x + 1/100)^(1/6)
///     < Gamma(1+x) <
///   sqrt(pi) (x/e)^x (8x^3 + 4x^2 + x + 1/30)^(1/6)
struct GammaBounds {
  double log_lo;
  double log_hi;

  double lo() const { return std::exp(log_lo); }
  double hi() const { return std::exp(log_hi); }
};

GammaBounds karatsuba_gamma_bounds(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

// ---------------------------------------------------------------------------
// Yang-Chu bounds on K_nu
// ---------------------------------------------------------------------------

/// Coefficients of the two Yang-Chu sandwiches for order nu >= 1.
struct YangChuCoefficients {
  double nu;
  double c0;
  double a1;
  double b1;
  double a2;
  double b2;
};

YangChuCoefficients yang_chu_coefficients(double nu);

/// Both sandwiches, expressed as bounds on log K_nu(z):
///   large-z family:  K_{1/2}(z) (1 + a1/z)^(nu-1/2) < K_nu(z) < ... b1
///   small-z family:  Gamma(nu)/2 (2/z)^nu e^-z (1 + a2 z)^(nu-1/2) < K_nu(z) < ... b2
struct YangChuLogBounds {
  double large_z_lo;
  double large_z_hi;
  double small_z_lo;
  double small_z_hi;
};

YangChuLogBounds yang_chu_log_bounds(const YangChuCoefficients& coeffs, double z);

}  // namespace logbessel

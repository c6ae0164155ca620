#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "logbessel/float_system.hpp"

namespace logbessel {

// ---------------------------------------------------------------------------
// Closed-form certificates for K_nu(z) against a level B.
//
// Every threshold is evaluated from log B, so levels of the analyzed system
// never have to be representable in the computing precision. The plain-B
// overloads are conveniences for the common case.
// ---------------------------------------------------------------------------

/// Smallest order for which the no-overflow certificate holds: e / (2(4 - e)).
inline constexpr double kOverflowSufficientMinOrder =
    std::numbers::e / (2.0 * (4.0 - std::numbers::e));

/// Order threshold above which K_nu(z) > B (for nu >= 1):
///   1/2 + A / W0(2A / (z0 e)),  A = log B + z0 - log(pi / (z0 e)) / 2,
///   z0 = max(z, pi / (B^2 e)).
double overflow_necessary_threshold(double b, double z);
double overflow_necessary_threshold_log(double log_b, double z);

/// Order threshold below which K_nu(z) < B (for nu >= e/(2(4-e))):
///   log x0 / W0(2 log x0 / (z e)) - z e / 2,
///   x0 = B / K_{1/2}(z) * (1 + 2/(z e))^((1 + z e)/2).
/// Returns -inf when x0 <= 1, where the certificate is empty.
double overflow_sufficient_threshold(double b, double z);
double overflow_sufficient_threshold_log(double log_b, double z);

/// Smallest z with K_nu(z) < B certified, for nu >= 1 and 0 < B <= 2 sqrt(pi/(2e)):
///   max(HH_upper(x0) / 2, 2nu/e, nu/2 + 1/4),  x0 = 2^(2nu-1) pi / B^2,
/// with HH_upper the Hoorfar-Hassani upper bound on W0.
double underflow_necessary_z(double b, double nu);
double underflow_necessary_z_log(double log_b, double nu);

/// Same certificate with W0(x0) bounded by log x0 instead; a looser but
/// simpler linear threshold nu log 2 + log(pi/2)/2 - log B.
double underflow_necessary_z_coarse(double b, double nu);
double underflow_necessary_z_coarse_log(double log_b, double nu);

/// Largest z with K_nu(z) >= B certified for every nu >= 1/2, for
/// 0 < B <= sqrt(pi/e): HH_lower(pi / B^2) / 2.
double underflow_sufficient_z(double b);
double underflow_sufficient_z_log(double log_b);

/// True iff L <= -(U+1)/2, in which case e^z K_nu(z) never underflows.
bool scaled_never_underflows(const FloatSystem& sys);

/// Smallest order covered by the bound K_nu(z) < (nu/z)^nu for z <= 1.
inline constexpr double kPowerBoundMinOrder =
    std::numbers::e * std::numbers::e / (2.0 * (std::numbers::e - 2.0));

/// Certifies log K_nu(z) < B from K_nu(z) < (nu/y)^nu with y = min(z, 1),
/// using monotonicity to lift nu to at least kPowerBoundMinOrder.
bool u_no_overflow_sufficient(double b, double nu, double z);

/// -z + log(pi / (2z + 1/2)) / 2, a lower bound on log K_nu(z) for all nu >= 0.
double log_k_lower_bound(double z);

/// Segura bracket on log(K_{nu+1}(z) / K_nu(z)) for nu >= -1/2:
///   log((nu + sqrt(nu^2 + z^2)) / z) < . <= log((nu + 1/2 + sqrt((nu + 1/2)^2 + z^2)) / z)
struct LogRatioBounds {
  double lo;
  double hi;
};

LogRatioBounds segura_log_ratio_bounds(double nu, double z);

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class Verdict {
  CertifiedOverflow,
  CertifiedNoOverflow,
  CertifiedUnderflow,
  CertifiedNoUnderflow,
  Undecided,
};

enum class Certificate {
  None,
  OverflowNecessary,    // order threshold, K > B_OFL
  OverflowSufficient,   // order threshold, K < B_OFL
  UnderflowNecessary,   // argument threshold, K < B_UFL
  UnderflowSufficient,  // argument threshold, K >= B_UFL
  DirectComparison,     // log_k against the log-levels
};

struct RegionVerdict {
  double nu;
  double z;
  Verdict verdict;
  Certificate decided_by;
  std::string note;
};

/// Applies the failure certificates first (overflow, then underflow). A point
/// is certified representable only when both no-failure certificates hold;
/// the verdict then names the one with the smaller relative margin. A point in
/// either gap, or with order below 1, comes back Undecided. With `exact`, an
/// undecided point is settled by comparing log_k against the levels.
RegionVerdict classify(const FloatSystem& sys, double nu, double z, bool exact = false);

std::string to_string(Verdict v);
std::string to_string(Certificate c);

// ---------------------------------------------------------------------------
// Frontier search
// ---------------------------------------------------------------------------

enum class FrontierKind { Overflow, Underflow };

/// One grid point of a frontier map.
///
/// Overflow: abscissa is z, the other fields are orders nu.
/// Underflow: abscissa is the order nu, the other fields are arguments z.
struct FrontierSample {
  double abscissa;
  double sufficient;
  double empirical;
  double necessary;
};

struct FrontierCurve {
  FrontierKind kind;
  FloatSystem system;
  std::vector<FrontierSample> samples;
};

inline constexpr int kFrontierMaxBisections = 60;

/// Locates where log_k crosses the overflow (resp. underflow) log-level by
/// bisection inside the bracket formed by the analytic certificates.
/// Grid values must be positive and increasing; underflow grids are orders
/// and must be >= 1. Throws ConvergenceError when the analytic bracket does
/// not straddle the crossing.
FrontierCurve frontier_search(const FloatSystem& sys, FrontierKind kind, const std::vector<double>& grid);

}  // namespace logbessel

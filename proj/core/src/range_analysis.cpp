#include "logbessel/range_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "logbessel/errors.hpp"
#include "logbessel/logk.hpp"
#include "logbessel/scalar_kernels.hpp"

namespace logbessel {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLogPi = 1.1447298858494002;  // log(pi)
constexpr double kInf = std::numeric_limits<double>::infinity();

double log_of_level(double b, const char* who) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError(std::string(who) + ": requires finite B > 0");
  return std::log(b);
}

void check_log_level(double log_b, const char* who) {
  if (!std::isfinite(log_b)) throw DomainError(std::string(who) + ": requires finite log B");
}

void check_argument(double z, const char* who) {
  if (!(z > 0.0) || !std::isfinite(z)) throw DomainError(std::string(who) + ": requires finite z > 0");
}

// log(2 sqrt(pi / (2e))) and log(sqrt(pi / e)).
constexpr double kLogUnderflowNecessaryMaxLevel = kLn2 + 0.5 * (kLogPi - kLn2 - 1.0);
constexpr double kLogUnderflowSufficientMaxLevel = 0.5 * (kLogPi - 1.0);

double log_x0_underflow_necessary(double log_b, double nu) {
  return (2.0 * nu - 1.0) * kLn2 + kLogPi - 2.0 * log_b;
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

double overflow_necessary_threshold_log(double log_b, double z) {
  check_log_level(log_b, "overflow_necessary_threshold");
  check_argument(z, "overflow_necessary_threshold");
  const double log_z_min = kLogPi - 2.0 * log_b - 1.0;  // log(pi / (B^2 e))
  const double log_z0 = std::max(std::log(z), log_z_min);
  const double z0 = std::exp(log_z0);
  const double a = log_b + z0 - 0.5 * (kLogPi - log_z0 - 1.0);
  // W0 argument 2A / (z0 e) in log form; it overflows for subnormal z.
  const double w = lambert_w0_from_log(kLn2 - log_z0 - 1.0 + std::log(a));
  return 0.5 + a / w;
}

double overflow_necessary_threshold(double b, double z) {
  return overflow_necessary_threshold_log(log_of_level(b, "overflow_necessary_threshold"), z);
}

double overflow_sufficient_threshold_log(double log_b, double z) {
  check_log_level(log_b, "overflow_sufficient_threshold");
  check_argument(z, "overflow_sufficient_threshold");
  const double ze = z * std::numbers::e;
  const double log_k_half = 0.5 * (kLogPi - kLn2 - std::log(z)) - z;
  const double log_x0 = log_b - log_k_half + 0.5 * (1.0 + ze) * std::log1p(2.0 / ze);
  if (!(log_x0 > 0.0)) return -kInf;
  const double w = lambert_w0_from_log(kLn2 - std::log(ze) + std::log(log_x0));
  return log_x0 / w - 0.5 * ze;
}

double overflow_sufficient_threshold(double b, double z) {
  return overflow_sufficient_threshold_log(log_of_level(b, "overflow_sufficient_threshold"), z);
}

double underflow_necessary_z_log(double log_b, double nu) {
  check_log_level(log_b, "underflow_necessary_z");
  if (!(nu >= 1.0) || !std::isfinite(nu)) throw DomainError("underflow_necessary_z: requires finite nu >= 1");
  if (log_b > kLogUnderflowNecessaryMaxLevel) {
    throw DomainError("underflow_necessary_z: requires B <= 2 sqrt(pi / (2e))");
  }
  const double hh = w0_upper_bound_hh_from_log(log_x0_underflow_necessary(log_b, nu));
  return std::max({0.5 * hh, 2.0 * nu / std::numbers::e, 0.5 * nu + 0.25});
}

double underflow_necessary_z(double b, double nu) {
  return underflow_necessary_z_log(log_of_level(b, "underflow_necessary_z"), nu);
}

double underflow_necessary_z_coarse_log(double log_b, double nu) {
  check_log_level(log_b, "underflow_necessary_z_coarse");
  if (!(nu >= 1.0) || !std::isfinite(nu)) {
    throw DomainError("underflow_necessary_z_coarse: requires finite nu >= 1");
  }
  if (log_b > kLogUnderflowNecessaryMaxLevel) {
    throw DomainError("underflow_necessary_z_coarse: requires B <= 2 sqrt(pi / (2e))");
  }
  const double log_x0 = log_x0_underflow_necessary(log_b, nu);
  return std::max({0.5 * log_x0, 2.0 * nu / std::numbers::e, 0.5 * nu + 0.25});
}

double underflow_necessary_z_coarse(double b, double nu) {
  return underflow_necessary_z_coarse_log(log_of_level(b, "underflow_necessary_z_coarse"), nu);
}

double underflow_sufficient_z_log(double log_b) {
  check_log_level(log_b, "underflow_sufficient_z");
  if (log_b > kLogUnderflowSufficientMaxLevel) {
    throw DomainError("underflow_sufficient_z: requires B <= sqrt(pi / e)");
  }
  return 0.5 * w0_lower_bound_hh_from_log(kLogPi - 2.0 * log_b);
}

double underflow_sufficient_z(double b) {
  return underflow_sufficient_z_log(log_of_level(b, "underflow_sufficient_z"));
}

bool scaled_never_underflows(const FloatSystem& sys) {
  return 2L * sys.min_exponent() <= -(static_cast<long>(sys.max_exponent()) + 1);
}

bool u_no_overflow_sufficient(double b, double nu, double z) {
  check_argument(z, "u_no_overflow_sufficient");
  if (!std::isfinite(nu)) throw DomainError("u_no_overflow_sufficient: order must be finite");
  const double nu_eff = std::max(std::abs(nu), kPowerBoundMinOrder);
  const double y = std::min(z, 1.0);
  return nu_eff * (std::log(nu_eff) - std::log(y)) <= b;
}

double log_k_lower_bound(double z) {
  check_argument(z, "log_k_lower_bound");
  return -z + 0.5 * (kLogPi - std::log(2.0 * z + 0.5));
}

LogRatioBounds segura_log_ratio_bounds(double nu, double z) {
  check_argument(z, "segura_log_ratio_bounds");
  if (!(nu >= -0.5) || !std::isfinite(nu)) throw DomainError("segura_log_ratio_bounds: requires nu >= -1/2");
  const double nh = nu + 0.5;
  return {std::log((nu + std::hypot(nu, z)) / z), std::log((nh + std::hypot(nh, z)) / z)};
}

RegionVerdict classify(const FloatSystem& sys, double nu, double z, bool exact) {
  check_argument(z, "classify");
  if (!std::isfinite(nu)) throw DomainError("classify: order must be finite");
  nu = std::abs(nu);
  RegionVerdict out{nu, z, Verdict::Undecided, Certificate::None, {}};

  const double log_ofl = sys.log_ofl();
  const double log_ufl = sys.log_ufl();
  const bool underflow_usable = log_ufl <= kLogUnderflowSufficientMaxLevel;

  if (nu >= 1.0) {
    if (nu >= overflow_necessary_threshold_log(log_ofl, z)) {
      out.verdict = Verdict::CertifiedOverflow;
      out.decided_by = Certificate::OverflowNecessary;
      return out;
    }
    if (underflow_usable && z >= underflow_necessary_z_log(log_ufl, nu)) {
      out.verdict = Verdict::CertifiedUnderflow;
      out.decided_by = Certificate::UnderflowNecessary;
      return out;
    }
    // A point is decided only when both failure modes are ruled out; the
    // verdict names the certificate with the smaller relative margin.
    const double nu_suf = overflow_sufficient_threshold_log(log_ofl, z);
    const bool no_overflow = nu >= kOverflowSufficientMinOrder && nu <= nu_suf;
    const double z_suf = underflow_usable ? underflow_sufficient_z_log(log_ufl) : -kInf;
    const bool no_underflow = underflow_usable && z <= z_suf;
    if (no_overflow && no_underflow) {
      const double overflow_margin = (nu_suf - nu) / nu_suf;
      const double underflow_margin = (z_suf - z) / z_suf;
      if (overflow_margin <= underflow_margin) {
        out.verdict = Verdict::CertifiedNoOverflow;
        out.decided_by = Certificate::OverflowSufficient;
      } else {
        out.verdict = Verdict::CertifiedNoUnderflow;
        out.decided_by = Certificate::UnderflowSufficient;
      }
      return out;
    }
    out.note = "between certificates";
  } else {
    out.note = "order below 1";
  }

  if (exact) {
    const double u = log_k(nu, z);
    out.decided_by = Certificate::DirectComparison;
    if (u > log_ofl) {
      out.verdict = Verdict::CertifiedOverflow;
    } else if (u < log_ufl) {
      out.verdict = Verdict::CertifiedUnderflow;
    } else {
      // Representable: both no-failure statements hold; report the nearer level.
      out.verdict = (log_ofl - u) < (u - log_ufl) ? Verdict::CertifiedNoOverflow : Verdict::CertifiedNoUnderflow;
      out.note = "representable";
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedOverflow: return "CertifiedOverflow";
    case Verdict::CertifiedNoOverflow: return "CertifiedNoOverflow";
    case Verdict::CertifiedUnderflow: return "CertifiedUnderflow";
    case Verdict::CertifiedNoUnderflow: return "CertifiedNoUnderflow";
    case Verdict::Undecided: return "Undecided";
  }
  return "Undecided";
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::None: return "none";
    case Certificate::OverflowNecessary: return "overflow-necessary";
    case Certificate::OverflowSufficient: return "overflow-sufficient";
    case Certificate::UnderflowNecessary: return "underflow-necessary";
    case Certificate::UnderflowSufficient: return "underflow-sufficient";
    case Certificate::DirectComparison: return "direct";
  }
  return "none";
}

namespace {

// f(lo) < 0 < f(hi) required; returns the midpoint of the final bracket.
template <class F>
double bisect(F f, double lo, double hi, const char* who) {
  const double flo = f(lo);
  const double fhi = f(hi);
  if (!(flo < 0.0 && fhi > 0.0)) {
    throw ConvergenceError(std::string(who) + ": bracket [" + format_double(lo) + ", " + format_double(hi) +
                               "] does not straddle the level",
                           0);
  }
  int it = 0;
  for (; it < kFrontierMaxBisections; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

FrontierCurve frontier_search(const FloatSystem& sys, FrontierKind kind, const std::vector<double>& grid) {
  FrontierCurve curve{kind, sys, {}};
  curve.samples.reserve(grid.size());
  double prev = -kInf;
  for (double x : grid) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("frontier_search: grid values must be finite and positive");
    if (!(x > prev)) throw DomainError("frontier_search: grid must be increasing");
    prev = x;
  }

  if (kind == FrontierKind::Overflow) {
    const double log_ofl = sys.log_ofl();
    for (double z : grid) {
      const double suf = overflow_sufficient_threshold_log(log_ofl, z);
      const double nec = overflow_necessary_threshold_log(log_ofl, z);
      const double lo = std::isfinite(suf) ? std::max(suf, 0.0) : 0.0;
      const double hi = std::max(nec, 1.0);
      const double emp =
          bisect([&](double nu) { return log_k(nu, z) - log_ofl; }, lo, hi, "frontier_search(overflow)");
      curve.samples.push_back({z, suf, emp, nec});
    }
  } else {
    const double log_ufl = sys.log_ufl();
    const double suf = underflow_sufficient_z_log(log_ufl);
    for (double nu : grid) {
      if (nu < 1.0) throw DomainError("frontier_search: underflow grid orders must be >= 1");
      const double nec = underflow_necessary_z_log(log_ufl, nu);
      // log_k is decreasing in z, so bisect on the negated gap.
      const double emp =
          bisect([&](double z) { return log_ufl - log_k(nu, z); }, suf, nec, "frontier_search(underflow)");
      curve.samples.push_back({nu, suf, emp, nec});
    }
  }
  return curve;
}

}  // namespace logbessel

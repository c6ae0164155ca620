#include "logbessel/student.hpp"

#include <cmath>
#include <numbers>

#include "logbessel/bessel_base.hpp"
#include "logbessel/errors.hpp"
#include "logbessel/logk.hpp"
#include "logbessel/scalar_kernels.hpp"

namespace logbessel {

namespace {

void check_dof(double nu, const char* who) {
  if (!(nu > 0.0) || !std::isfinite(nu)) throw DomainError(std::string(who) + ": requires finite nu > 0");
}

double to_single(double x) { return static_cast<double>(static_cast<float>(x)); }

double log_psi_from_log_k(double nu, double z, double log_kv) {
  return log_kv - log_gamma(nu) + nu * std::log(0.5 * z);
}

double cf_direct(double v, double z, Precision precision) {
  // 2^(1 - v) / Gamma(v) * z^v * K_v(z), with v = nu/2
  if (precision == Precision::Double) {
    return std::pow(2.0, 1.0 - v) / std::tgamma(v) * std::pow(z, v) * conventional_bessel_k(v, z);
  }
  const float c = static_cast<float>(std::pow(2.0, 1.0 - v)) / static_cast<float>(std::tgamma(v));
  const float p = static_cast<float>(std::pow(z, v));
  const float k = static_cast<float>(conventional_bessel_k(v, z));
  return static_cast<double>(c * p * k);
}

}  // namespace

std::string to_string(CfMethod m) {
  switch (m) {
    case CfMethod::Direct: return "direct";
    case CfMethod::LogDirect: return "logdirect";
    case CfMethod::LogRecursion: return "logrec";
  }
  return "logrec";
}

CfMethod parse_cf_method(const std::string& text) {
  if (text == "direct") return CfMethod::Direct;
  if (text == "logdirect") return CfMethod::LogDirect;
  if (text == "logrec") return CfMethod::LogRecursion;
  throw DomainError("unknown method '" + text + "' (expected direct, logdirect or logrec)");
}

double psi(double nu, double z) {
  check_dof(nu, "psi");
  if (!(z >= 0.0)) throw DomainError("psi: requires z >= 0");
  if (z == 0.0) return 0.5;
  if (std::isinf(z)) return 0.0;
  return std::exp(log_psi_from_log_k(nu, z, log_k(nu, z)));
}

double student_cf(double nu, double t, CfMethod method, Precision precision) {
  check_dof(nu, "student_cf");
  if (std::isnan(t)) throw DomainError("student_cf: t is NaN");
  if (t == 0.0) return 1.0;
  const double v = 0.5 * nu;
  const double z = std::sqrt(nu) * std::abs(t);
  if (std::isinf(z)) return 0.0;

  double phi = 0.0;
  switch (method) {
    case CfMethod::Direct:
      return cf_direct(v, z, precision);
    case CfMethod::LogDirect: {
      const double log_kv = std::log(conventional_bessel_k_scaled(v, z)) - z;
      phi = 2.0 * std::exp(log_psi_from_log_k(v, z, log_kv));
      break;
    }
    case CfMethod::LogRecursion:
      phi = 2.0 * psi(v, z);
      break;
  }
  return precision == Precision::Single ? to_single(phi) : phi;
}

QuadratureResult gil_pelaez_pdf(double nu, double x, CfMethod method, const QuadratureOptions& opts,
                                Precision precision) {
  check_dof(nu, "gil_pelaez_pdf");
  if (!std::isfinite(x)) throw DomainError("gil_pelaez_pdf: x must be finite");
  auto f = [=](double t) { return std::cos(t * x) * student_cf(nu, t, method, precision); };
  QuadratureResult r = gauss_kronrod_integrate_half_line(f, opts);
  r.value /= std::numbers::pi;
  r.abs_error_estimate /= std::numbers::pi;
  return r;
}

QuadratureResult gil_pelaez_cdf(double nu, double x, CfMethod method, const QuadratureOptions& opts,
                                Precision precision) {
  check_dof(nu, "gil_pelaez_cdf");
  if (!std::isfinite(x)) throw DomainError("gil_pelaez_cdf: x must be finite");
  if (x == 0.0) return {0.5, 0.0, 0, true};
  auto f = [=](double t) {
    if (t == 0.0) return x;
    return std::sin(t * x) / t * student_cf(nu, t, method, precision);
  };
  QuadratureResult r = gauss_kronrod_integrate_half_line(f, opts);
  r.value = 0.5 + r.value / std::numbers::pi;
  r.abs_error_estimate /= std::numbers::pi;
  return r;
}

double student_pdf_closed(double nu, double x) {
  check_dof(nu, "student_pdf_closed");
  const double log_pdf = log_gamma(0.5 * (nu + 1.0)) - log_gamma(0.5 * nu) -
                         0.5 * std::log(nu * std::numbers::pi) - 0.5 * (nu + 1.0) * std::log1p(x * x / nu);
  return std::exp(log_pdf);
}

std::vector<ErrorReportRow> error_report(const std::vector<double>& nu_list, const std::vector<double>& x_grid,
                                         const std::vector<CfMethod>& methods, Precision precision,
                                         const QuadratureOptions& opts) {
  if (nu_list.empty() || x_grid.empty() || methods.empty()) {
    throw DomainError("error_report: grids must be non-empty");
  }
  std::vector<ErrorReportRow> rows;
  rows.reserve(nu_list.size() * x_grid.size() * methods.size());
  for (double nu : nu_list) {
    check_dof(nu, "error_report");
    const double sqrt_nu = std::sqrt(nu);
    for (double x : x_grid) {
      const double closed = student_pdf_closed(nu, x);
      for (CfMethod m : methods) {
        bool replaced = false;
        auto f = [&](double t) {
          double phi = student_cf(nu, t, m, precision);
          if (!std::isfinite(phi)) {
            replaced = true;
            phi = sqrt_nu * std::abs(t) < 0.5 * nu ? 1.0 : 0.0;
          }
          return std::cos(t * x) * phi;
        };
        const QuadratureResult q = gauss_kronrod_integrate_half_line(f, opts);
        const double pdf = q.value / std::numbers::pi;
        rows.push_back({nu, x, m, pdf, closed, std::abs(pdf - closed), replaced, q.converged});
      }
    }
  }
  return rows;
}

}  // namespace logbessel

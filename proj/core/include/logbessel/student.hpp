#pragma once

#include <string>
#include <vector>

#include "logbessel/quadrature.hpp"

namespace logbessel {

/// How K_nu enters the Student-t characteristic function.
enum class CfMethod {
  Direct,        ///< 2^(1-v/2) / Gamma(v/2) * z^(v/2) * K_{v/2}(z) in linear space
  LogDirect,     ///< log-space product with the logarithm of a linear-space K_{v/2}
  LogRecursion,  ///< log-space product with log_k
};

/// Arithmetic emulated for the characteristic function. Single rounds the
/// Direct factors (or the log-space result) through float.
enum class Precision { Double, Single };

std::string to_string(CfMethod m);
CfMethod parse_cf_method(const std::string& text);

/// psi_nu(z) = z^nu K_nu(z) / (2^nu Gamma(nu)), evaluated as
/// exp(log_k(nu, z) - log Gamma(nu) + nu log(z/2)); psi_nu(0) = 1/2.
double psi(double nu, double z);

/// Characteristic function of Student's t with nu degrees of freedom,
/// phi_nu(t) = 2 psi_{nu/2}(sqrt(nu) |t|), phi_nu(0) = 1.
/// The Direct method may return inf or NaN; that is not masked here.
double student_cf(double nu, double t, CfMethod method, Precision precision = Precision::Double);

/// Density (1/pi) int_0^inf cos(t x) phi_nu(t) dt. A non-finite integrand
/// propagates into a non-converged result.
QuadratureResult gil_pelaez_pdf(double nu, double x, CfMethod method, const QuadratureOptions& opts = {},
                                Precision precision = Precision::Double);

/// Distribution function 1/2 + (1/pi) int_0^inf sin(t x) phi_nu(t) / t dt,
/// the integrand taking the value x at t = 0.
QuadratureResult gil_pelaez_cdf(double nu, double x, CfMethod method, const QuadratureOptions& opts = {},
                                Precision precision = Precision::Double);

/// Student-t density in closed form, computed in log space.
double student_pdf_closed(double nu, double x);

struct ErrorReportRow {
  double nu;
  double x;
  CfMethod method;
  double pdf_gilpelaez;
  double pdf_closed;
  double abs_error;
  bool cf_overflowed;  ///< some phi value was non-finite and got replaced
  bool converged;
};

/// Gil-Pelaez density against the closed form on every (nu, x, method) cell.
///
/// Non-finite characteristic-function values are replaced before
/// integration: by 1 on the small-argument side (sqrt(nu)|t| < nu/2) where
/// they come from K overflowing, by 0 beyond it where they come from
/// inf * 0 products in the tail. Either replacement sets cf_overflowed.
std::vector<ErrorReportRow> error_report(const std::vector<double>& nu_list, const std::vector<double>& x_grid,
                                         const std::vector<CfMethod>& methods,
                                         Precision precision = Precision::Double,
                                         const QuadratureOptions& opts = {});

}  // namespace logbessel

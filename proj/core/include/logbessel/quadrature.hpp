#pragma once

#include <functional>

namespace logbessel {

struct QuadratureResult {
  double value;
  double abs_error_estimate;
  int subintervals;
  bool converged;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subintervals = 2000;
};

/// Adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
///
/// The interval with the largest error estimate is bisected until the total
/// estimate drops below max(abs_tol, rel_tol |value|). Hitting the
/// subinterval cap, or an interval too narrow to split, returns the best
/// estimate with converged = false.
QuadratureResult gauss_kronrod_integrate(const std::function<double(double)>& f, double a, double b,
                                         const QuadratureOptions& opts = {});

/// Same scheme on [0, inf) after the change of variable t = (1 - s) / s,
/// s in (0, 1]. f must decay fast enough for the transformed integrand
/// f((1 - s)/s) / s^2 to be integrable.
QuadratureResult gauss_kronrod_integrate_half_line(const std::function<double(double)>& f,
                                                   const QuadratureOptions& opts = {});

}  // namespace logbessel

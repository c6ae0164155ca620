#pragma once

namespace logbessel {

/// Consecutive logarithms u = log K_nu(z), u_next = log K_{nu+1}(z).
struct LogBesselValue {
  double nu;
  double z;
  double u;
  double u_next;
};

/// log K_nu(z) for real nu (K is even in nu) and z > 0.
///
/// The order is split as nu = nu0 + n with nu0 in [0, 1). Starting from the
/// scaled seed pair, the sequence is advanced with the ratio recurrence
/// r_{m+1} = 1/r_m + 2(m+1)/z while log K stays non-positive, then with
///   u_{m+2} = u_m + log1p((2(m+1)/z) exp(u_{m+1} - u_m))
/// once u_m > 0, where each step has condition number at most one.
double log_k(double nu, double z);

/// log(e^z K_nu(z)). The recursion runs on scaled logarithms, so no large
/// cancellation occurs for large z.
double log_k_scaled(double nu, double z);

/// Both members of the pair at order |nu|.
LogBesselValue log_k_pair(double nu, double z);

/// Result of the lattice search for the recursion start.
struct Nu0Selection {
  bool direct;  ///< log K_nu(z) <= 0: no log recursion is needed
  double nu0;   ///< smallest lattice point nu - floor(nu) + k with log K > 0 (valid if !direct)
  long k;
};

/// nu >= 0. The search is linear in k and capped by the order above which
/// K_nu(z) > 1 is certified analytically.
Nu0Selection select_nu0(double nu, double z);

/// log K_nu(z) as log K_{nu0}(z) + sum_k log r_{nu0+k}(z), with nu0 = nu - floor(nu),
/// the first ratio taken from the continued fraction and the rest from the
/// forward ratio recurrence. Independent cross-check of log_k.
double log_k_sum_of_ratios(double nu, double z);

/// Advances a pair by `steps` applications of the log recurrence. The
/// recurrence only involves differences of u, so it applies to scaled and
/// unscaled logarithms alike.
LogBesselValue advance_log_recursion(LogBesselValue start, long steps);

/// One step of the log recurrence at order nu: returns u_{nu+1} from
/// u_{nu-1} and u_nu.
double log_recurrence_step(double nu, double z, double u_prev, double u_cur);

/// I_{nu+1}(z) / I_nu(z) by the continued fraction
///   1 / (2(nu+1)/z + 1 / (2(nu+2)/z + ...)), modified Lentz.
double i_ratio_cf(double nu, double z);

/// log I_nu(z) from the Wronskian I_nu K_{nu+1} + I_{nu+1} K_nu = 1/z:
///   log I_nu = -log z - log K_nu - log(I_{nu+1}/I_nu + K_{nu+1}/K_nu)
double log_i(double nu, double z);

}  // namespace logbessel

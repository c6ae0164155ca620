#pragma once

#include <string_view>

namespace logbessel {

/// Smallest denormal, underflow and overflow levels of a floating-point system.
struct FloatLevels {
  double sdn;  ///< 2^(L-P)
  double ufl;  ///< 2^L
  double ofl;  ///< (1 - 2^-P) 2^(U+1)
};

/// Binary floating-point system described by its significand precision P and
/// exponent range [L, U].
///
/// The analyzed system is independent of the arithmetic used to analyze it:
/// the log-levels are available for systems whose levels do not fit in a
/// double.
class FloatSystem {
 public:
  /// Throws DomainError unless P >= 1 and L < 0 < U.
  FloatSystem(int precision_bits, int min_exponent, int max_exponent);

  static FloatSystem single_precision() { return {23, -126, 127}; }
  static FloatSystem double_precision() { return {52, -1022, 1023}; }

  /// Accepts "single", "double" or "custom:P,L,U".
  static FloatSystem parse(std::string_view text);

  int precision_bits() const noexcept { return precision_bits_; }
  int min_exponent() const noexcept { return min_exponent_; }
  int max_exponent() const noexcept { return max_exponent_; }

  double log_sdn() const noexcept;
  double log_ufl() const noexcept;
  double log_ofl() const noexcept;

  friend bool operator==(const FloatSystem&, const FloatSystem&) = default;

 private:
  int precision_bits_;
  int min_exponent_;
  int max_exponent_;
};

/// Levels rounded into double; may saturate to 0 or inf for custom systems
/// wider than double itself.
FloatLevels derived_levels(const FloatSystem& sys);

}  // namespace logbessel

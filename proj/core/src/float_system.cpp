#include "logbessel/float_system.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "logbessel/errors.hpp"

namespace logbessel {

FloatSystem::FloatSystem(int precision_bits, int min_exponent, int max_exponent)
    : precision_bits_(precision_bits), min_exponent_(min_exponent), max_exponent_(max_exponent) {
  if (precision_bits < 1) throw DomainError("float system: precision must be >= 1");
  if (!(min_exponent < 0 && max_exponent > 0)) {
    throw DomainError("float system: exponents must satisfy L < 0 < U");
  }
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw DomainError("float system: cannot parse " + std::string(what) + " from '" +
                      std::string(s) + "'");
  }
  return value;
}

}  // namespace

FloatSystem FloatSystem::parse(std::string_view text) {
  if (text == "single") return single_precision();
  if (text == "double") return double_precision();
  constexpr std::string_view kPrefix = "custom:";
  if (text.starts_with(kPrefix)) {
    auto rest = text.substr(kPrefix.size());
    const auto c1 = rest.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(',', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw DomainError("float system: expected custom:P,L,U");
    }
    return {parse_int(rest.substr(0, c1), "P"), parse_int(rest.substr(c1 + 1, c2 - c1 - 1), "L"),
            parse_int(rest.substr(c2 + 1), "U")};
  }
  throw DomainError("float system: unknown '" + std::string(text) + "'");
}

double FloatSystem::log_sdn() const noexcept {
  return static_cast<double>(min_exponent_ - precision_bits_) * std::numbers::ln2;
}

double FloatSystem::log_ufl() const noexcept {
  return static_cast<double>(min_exponent_) * std::numbers::ln2;
}

double FloatSystem::log_ofl() const noexcept {
  return std::log1p(-std::ldexp(1.0, -precision_bits_)) +
         static_cast<double>(max_exponent_ + 1) * std::numbers::ln2;
}

FloatLevels derived_levels(const FloatSystem& sys) {
  const int p = sys.precision_bits();
  const int l = sys.min_exponent();
  const int u = sys.max_exponent();
  // (1 - 2^-P) is exact for P <= 53, and scaling by a power of two is exact
  // whenever the result is representable.
  return {std::ldexp(1.0, l - p), std::ldexp(1.0, l), std::ldexp(1.0 - std::ldexp(1.0, -p), u + 1)};
}

}  // namespace logbessel

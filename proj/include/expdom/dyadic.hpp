#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace expdom {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact signed dyadic rational m / 2^e.
 *
 * Always kept in lowest terms: either m is odd, or m is even and e == 0
 * (zero is stored as 0 / 2^0). Equality is therefore structural.
 */
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Dyadic(BigInt numerator, std::uint32_t exponent);

  /// 2^k for any signed k.
  static Dyadic pow2(std::int64_t k);

  /// Parses "m/2^e" (the serialization produced by to_string) or a plain integer.
  static Dyadic parse(std::string_view text);

  const BigInt& numerator() const noexcept { return numerator_; }
  std::uint32_t exponent() const noexcept { return exponent_; }

  int sign() const noexcept { return numerator_.sign(); }
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  /// Multiplies by 2^k (k may be negative).
  Dyadic scaled(std::int64_t k) const;

  Dyadic operator-() const;
  Dyadic& operator+=(const Dyadic& rhs);
  Dyadic& operator-=(const Dyadic& rhs);
  Dyadic& operator*=(const Dyadic& rhs);

  friend Dyadic operator+(Dyadic lhs, const Dyadic& rhs) { return lhs += rhs; }
  friend Dyadic operator-(Dyadic lhs, const Dyadic& rhs) { return lhs -= rhs; }
  friend Dyadic operator*(Dyadic lhs, const Dyadic& rhs) { return lhs *= rhs; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.numerator_ == b.numerator_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "m/2^e", e.g. "3/2^1", "-1/2^3", "2/2^0".
  std::string to_string() const;

  /// Nearest double; display only, never used for threshold decisions.
  double to_double() const;

 private:
  void normalize();

  BigInt numerator_ = 0;
  std::uint32_t exponent_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& value);

}  // namespace expdom

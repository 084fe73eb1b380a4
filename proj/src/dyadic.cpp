#include "expdom/dyadic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "expdom/error.hpp"

namespace expdom {

namespace {

BigInt shifted_left(const BigInt& value, std::uint64_t bits) {
  return bits == 0 ? value : BigInt(value << bits);
}

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty integer literal");
  }
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorKind::InvalidArgument, "malformed integer literal");
  }
  BigInt value{std::string(text)};
  return negative ? BigInt(-value) : value;
}

}  // namespace

Dyadic::Dyadic(std::int64_t value) : numerator_(value), exponent_(0) {}

Dyadic::Dyadic(BigInt numerator, std::uint32_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent) {
  normalize();
}

Dyadic Dyadic::pow2(std::int64_t k) {
  if (k >= 0) {
    return Dyadic(BigInt(1) << static_cast<unsigned>(k), 0);
  }
  return Dyadic(BigInt(1), static_cast<std::uint32_t>(-k));
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Dyadic(parse_bigint(text), 0);
  }
  const auto denom = text.substr(slash + 1);
  if (denom.size() < 3 || denom.substr(0, 2) != "2^") {
    throw Error(ErrorKind::InvalidArgument, "dyadic denominator must be 2^e");
  }
  std::uint32_t exponent = 0;
  const auto digits = denom.substr(2);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::InvalidArgument, "malformed dyadic exponent");
  }
  return Dyadic(parse_bigint(text.substr(0, slash)), exponent);
}

void Dyadic::normalize() {
  if (numerator_.is_zero()) {
    exponent_ = 0;
    return;
  }
  if (exponent_ == 0) {
    return;
  }
  BigInt magnitude = boost::multiprecision::abs(numerator_);
  const auto trailing = static_cast<std::uint32_t>(boost::multiprecision::lsb(magnitude));
  const auto k = std::min(trailing, exponent_);
  if (k > 0) {
    const bool negative = numerator_.sign() < 0;
    magnitude >>= k;  // exact: the low k bits are zero
    numerator_ = negative ? BigInt(-magnitude) : magnitude;
    exponent_ -= k;
  }
}

Dyadic Dyadic::scaled(std::int64_t k) const {
  Dyadic out = *this;
  if (out.is_zero() || k == 0) {
    return out;
  }
  if (k > 0) {
    const auto absorb = std::min<std::int64_t>(k, out.exponent_);
    out.exponent_ -= static_cast<std::uint32_t>(absorb);
    out.numerator_ = shifted_left(out.numerator_, static_cast<std::uint64_t>(k - absorb));
  } else {
    out.exponent_ += static_cast<std::uint32_t>(-k);
  }
  out.normalize();
  return out;
}

Dyadic Dyadic::operator-() const {
  Dyadic out = *this;
  out.numerator_ = -out.numerator_;
  return out;
}

Dyadic& Dyadic::operator+=(const Dyadic& rhs) {
  if (rhs.is_zero()) {
    return *this;
  }
  if (exponent_ >= rhs.exponent_) {
    numerator_ += shifted_left(rhs.numerator_, exponent_ - rhs.exponent_);
  } else {
    numerator_ = shifted_left(numerator_, rhs.exponent_ - exponent_) + rhs.numerator_;
    exponent_ = rhs.exponent_;
  }
  normalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& rhs) { return *this += -rhs; }

Dyadic& Dyadic::operator*=(const Dyadic& rhs) {
  numerator_ *= rhs.numerator_;
  exponent_ += rhs.exponent_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  BigInt lhs = a.numerator_;
  BigInt rhs = b.numerator_;
  if (a.exponent_ > b.exponent_) {
    rhs <<= (a.exponent_ - b.exponent_);
  } else if (b.exponent_ > a.exponent_) {
    lhs <<= (b.exponent_ - a.exponent_);
  }
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  return numerator_.str() + "/2^" + std::to_string(exponent_);
}

double Dyadic::to_double() const {
  return std::ldexp(numerator_.convert_to<double>(), -static_cast<int>(exponent_));
}

std::ostream& operator<<(std::ostream& os, const Dyadic& value) {
  return os << value.to_string();
}

}  // namespace expdom

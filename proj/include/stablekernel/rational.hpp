#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stablekernel {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always normalized: gcd(|num|, den) == 1 and den >= 1. Arithmetic is done
/// in 128 bits and throws std::overflow_error when the normalized result
/// does not fit back into 64 bits.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(Wide{a.num_} * b.den_ - Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(Wide{a.num_} * b.num_, Wide{a.den_} * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(Wide{a.num_} * b.den_, Wide{a.den_} * b.num_);
  }
  Rational operator-() const { return from_wide(-Wide{num_}, den_); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    // Denominators are positive, so cross-multiplication preserves order.
    const Wide lhs = Wide{a.num_} * b.den_;
    const Wide rhs = Wide{b.num_} * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// `3`, `-1/2`: the form accepted back by parse().
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses `[-]digits`, `[-]digits/digits` or `[-]digits.digits`; decimals
  /// are converted exactly. Throws std::invalid_argument on malformed text.
  static Rational parse(std::string_view text);

 private:
  using Wide = __int128;

  static Wide wide_gcd(Wide a, Wide b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(Wide num, Wide den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const Wide g = wide_gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr Wide lo = std::numeric_limits<std::int64_t>::min();
    constexpr Wide hi = std::numeric_limits<std::int64_t>::max();
    if (num < lo || num > hi || den > hi) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

inline Rational Rational::parse(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const auto digits = [&](Wide& out) {
    const std::size_t start = pos;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      out = out * 10 + (text[pos] - '0');
      if (out > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("rational overflow");
      ++pos;
    }
    return pos - start;
  };
  Wide whole = 0;
  if (digits(whole) == 0) return fail();
  Wide num = whole;
  Wide den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (digits(den) == 0 || den == 0) return fail();
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::size_t start = pos;
    Wide frac = 0;
    const std::size_t n = digits(frac);
    if (n == 0) return fail();
    for (std::size_t i = start; i < pos; ++i) {
      den *= 10;
      if (den > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("rational overflow");
    }
    num = whole * den + frac;
  }
  if (pos != text.size()) return fail();
  return from_wide(negative ? -num : num, den);
}

/// Value of an aggregate function: a rational or one of the infinities.
class ExtendedValue {
 public:
  enum class Tag { MinusInf, Finite, PlusInf };

  ExtendedValue(Rational value) : tag_(Tag::Finite), value_(value) {}  // NOLINT(implicit)
  static ExtendedValue plus_infinity() { return ExtendedValue(Tag::PlusInf); }
  static ExtendedValue minus_infinity() { return ExtendedValue(Tag::MinusInf); }

  Tag tag() const noexcept { return tag_; }
  bool is_finite() const noexcept { return tag_ == Tag::Finite; }
  /// Only meaningful when is_finite().
  const Rational& value() const noexcept { return value_; }

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) noexcept {
    return a.tag_ == b.tag_ && (a.tag_ != Tag::Finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) noexcept {
    if (a.tag_ != b.tag_) return a.tag_ <=> b.tag_;
    if (a.tag_ != Tag::Finite) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    switch (tag_) {
      case Tag::MinusInf: return "-inf";
      case Tag::PlusInf: return "+inf";
      case Tag::Finite: break;
    }
    return value_.to_string();
  }

 private:
  explicit ExtendedValue(Tag tag) : tag_(tag) {}

  Tag tag_;
  Rational value_;
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedValue& v) { return os << v.to_string(); }

using Weight = Rational;

}  // namespace stablekernel

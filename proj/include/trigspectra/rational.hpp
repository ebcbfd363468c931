#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace trigspectra {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction of arbitrary-precision integers, always kept in lowest
/// terms with a positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(const BigInt& value) : value_(value) {}  // NOLINT
  /// Throws std::domain_error on a zero denominator.
  Rational(const BigInt& numerator, const BigInt& denominator);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  /// Decimal expansion rounded half-away-from-zero to `digits` fractional
  /// digits, trailing zeros trimmed.
  std::string decimal(int digits = 30) const;

  /// Nearest floating-point value.
  template <typename Scalar>
  Scalar to() const {
    return value_.template convert_to<Scalar>();
  }
  double to_double() const { return to<double>(); }

 private:
  boost::multiprecision::cpp_rational value_{0};
};

Rational abs(const Rational& r);
/// Integer power; negative exponents invert (domain error for 0^-k).
Rational pow(const Rational& base, int exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace trigspectra

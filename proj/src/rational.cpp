#include "trigspectra/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace trigspectra {

namespace mp = boost::multiprecision;

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  if (denominator < 0) {
    value_ = mp::cpp_rational(BigInt(-numerator), BigInt(-denominator));
  } else {
    value_ = mp::cpp_rational(numerator, denominator);
  }
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) throw std::domain_error("Rational::decimal: negative digit count");
  const BigInt num = numerator();
  const BigInt den = denominator();
  BigInt magnitude = num < 0 ? BigInt(-num) : num;

  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero: floor((2*|p|*10^d + q) / (2q))
  BigInt scaled = (2 * magnitude * scale + den) / (2 * den);

  std::string text = scaled.str();
  if (digits > 0) {
    if (text.size() <= static_cast<std::size_t>(digits)) {
      text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    }
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  if (num < 0 && text != "0") text.insert(0, "-");
  return text;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == Rational(0)) throw std::domain_error("pow: zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  Rational result(1);
  Rational factor = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= factor;
    if (e > 1) factor *= factor;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace trigspectra

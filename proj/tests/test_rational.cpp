#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "trigspectra/rational.hpp"

using trigspectra::BigInt;
using trigspectra::Rational;

namespace {

// Random big integer with up to `limbs` 64-bit limbs and a random sign.
BigInt random_big(std::mt19937_64& rng, int limbs) {
  BigInt value = 0;
  const int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(limbs));
  for (int i = 0; i < count; ++i) {
    value <<= 64;
    value += rng();
  }
  return (rng() & 1U) ? BigInt(-value) : value;
}

Rational random_rational(std::mt19937_64& rng) {
  BigInt den = random_big(rng, 3);
  if (den == 0) den = 1;
  return Rational(random_big(rng, 4), den);
}

}  // namespace

TEST_CASE("canonical form") {
  const Rational r(BigInt(6), BigInt(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");

  const Rational zero(BigInt(0), BigInt(-17));
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(zero.str() == "0");
  CHECK(Rational().str() == "0");

  CHECK(Rational(BigInt(10), BigInt(5)).is_integer());
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("exact arithmetic") {
  const Rational third(BigInt(1), BigInt(3));
  const Rational sixth(BigInt(1), BigInt(6));
  CHECK(third + sixth == Rational(BigInt(1), BigInt(2)));
  CHECK(third - sixth == sixth);
  CHECK(third * sixth == Rational(BigInt(1), BigInt(18)));
  CHECK(third / sixth == Rational(2));
  CHECK_THROWS_AS(third / Rational(0), std::domain_error);
  CHECK(-third == Rational(BigInt(-1), BigInt(3)));
  CHECK(trigspectra::abs(-third) == third);

  CHECK(pow(Rational(BigInt(4), BigInt(3)), 3) == Rational(BigInt(64), BigInt(27)));
  CHECK(pow(Rational(BigInt(2), BigInt(3)), -2) == Rational(BigInt(9), BigInt(4)));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK_THROWS_AS(pow(Rational(0), -1), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(BigInt(-4), BigInt(3)) < Rational(BigInt(-1), BigInt(1)));
  CHECK(Rational(BigInt(8), BigInt(3)) > Rational(2));
  CHECK((Rational(BigInt(2), BigInt(4)) <=> Rational(BigInt(1), BigInt(2))) == std::strong_ordering::equal);
}

TEST_CASE("decimal rendering") {
  CHECK(Rational(BigInt(8), BigInt(3)).decimal(5) == "2.66667");
  CHECK(Rational(BigInt(-4), BigInt(3)).decimal(3) == "-1.333");
  CHECK(Rational(BigInt(1), BigInt(8)).decimal(30) == "0.125");
  CHECK(Rational(7).decimal() == "7");
  CHECK(Rational(BigInt(-1), BigInt(1000)).decimal(2) == "0");
  CHECK(Rational(BigInt(1), BigInt(200)).decimal(2) == "0.01");

  std::ostringstream os;
  os << Rational(BigInt(512), BigInt(81));
  CHECK(os.str() == "512/81");
}

TEST_CASE("conversion to floating point") {
  CHECK(Rational(BigInt(4), BigInt(3)).to_double() == doctest::Approx(4.0 / 3.0).epsilon(1e-16));
  CHECK(Rational(BigInt(1), BigInt(4)).to<long double>() == 0.25L);
}

TEST_CASE("property: additive round trip on random big rationals") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    CHECK((a + b) - b == a);
    if (b != Rational(0)) CHECK((a * b) / b == a);
    CHECK(a.denominator() > 0);
  }
}

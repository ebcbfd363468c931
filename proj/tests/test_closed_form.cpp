#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "trigspectra/closed_form.hpp"

using namespace trigspectra;

namespace {

Rational q(long long p, long long d) { return Rational(BigInt(p), BigInt(d)); }

// Test-only oracle: direct long double sum of sin^{-2p}(k pi / n), no
// argument reduction tricks.
long double naive_power_sum(int n, int p) {
  long double total = 0;
  for (int k = 1; k < n; ++k) {
    const long double s = std::sin(std::numbers::pi_v<long double> * k / n);
    total += std::pow(s, -2 * p);
  }
  return total;
}

long double naive_cos_sum(int n, int s, int p) {
  long double total = 0;
  const long double pi = std::numbers::pi_v<long double>;
  for (int k = 1; k < n; ++k) {
    total += std::pow(std::sin(pi * k / n), -2 * p) * std::cos(2 * pi * s * k / n);
  }
  return total;
}

}  // namespace

TEST_CASE("sigma spot values") {
  CHECK(sigma(1, 1) == Rational(0));
  CHECK(sigma(3, 1) == q(8, 3));
  CHECK(sigma(3, 2) == q(32, 9));
  CHECK(sigma(3, 3) == q(128, 27));
  CHECK(sigma(3, 4) == q(512, 81));
  // n = 3: both terms are (4/3)^p
  for (int p = 1; p <= 4; ++p) CHECK(sigma(3, p) == Rational(2) * pow(q(4, 3), p));
  CHECK(sigma(2, 4) == Rational(1));
  CHECK(sigma(4, 1) == Rational(5));

  CHECK_THROWS_AS(sigma(3, 0), std::domain_error);
  CHECK_THROWS_AS(sigma(3, 5), std::domain_error);
  CHECK_THROWS_AS(sigma(0, 1), std::domain_error);
}

TEST_CASE("sigma agrees with a naive long double power sum") {
  for (int n = 2; n <= 40; ++n) {
    for (int p = 1; p <= 4; ++p) {
      const long double exact = sigma(n, p).to<long double>();
      CHECK(std::abs(naive_power_sum(n, p) - exact) <= 1e-14L * exact);
    }
  }
}

TEST_CASE("sigma denominators divide 3, 45, 945, 14175") {
  const long long bound[] = {3, 45, 945, 14175};
  for (int n = 1; n <= 300; ++n) {
    for (int p = 1; p <= 4; ++p) {
      CAPTURE(n);
      CAPTURE(p);
      CHECK(BigInt(bound[p - 1]) % sigma(n, p).denominator() == 0);
    }
  }
}

TEST_CASE("spectral index range") {
  CHECK_NOTHROW(SpectralIndex(1, 1));
  CHECK_THROWS_AS(SpectralIndex(3, 0), std::domain_error);
  CHECK_THROWS_AS(SpectralIndex(3, 4), std::domain_error);
  CHECK_THROWS_AS(SpectralIndex(0, 0), std::domain_error);
}

TEST_CASE("eigenvalue formulas") {
  CHECK(eig_a(SpectralIndex(2, 1)) == -1);
  CHECK(eig_a(SpectralIndex(2, 2)) == 1);
  CHECK(eig_a(SpectralIndex(1, 1)) == 0);
  for (int s = 1; s <= 4; ++s) CHECK(eig_a(SpectralIndex(4, s)) == 2 * s - 5);

  CHECK(eig_b(SpectralIndex(2, 1)) == Rational(-1));
  CHECK(eig_b(SpectralIndex(2, 2)) == Rational(1));
  CHECK(eig_b(SpectralIndex(3, 1)) == q(-4, 3));

  CHECK(eig_c(SpectralIndex(2, 1)) == Rational(-1));
  CHECK(eig_c(SpectralIndex(3, 1)) == q(-16, 9));

  for (int n = 1; n <= 50; ++n) {
    CHECK(eig_b(SpectralIndex(n, n)) == sigma(n, 1));
    CHECK(eig_c(SpectralIndex(n, n)) == sigma(n, 2));
    for (int s = 1; s < n; ++s) {
      CHECK(eig_b(SpectralIndex(n, s)) == eig_b(SpectralIndex(n, n - s)));
      CHECK(eig_c(SpectralIndex(n, s)) == eig_c(SpectralIndex(n, n - s)));
    }
  }
}

TEST_CASE("eigenvalues of B and C agree with naive cosine sums") {
  for (int n = 2; n <= 30; ++n) {
    for (int s = 1; s <= n; ++s) {
      const SpectralIndex idx(n, s);
      const long double b = eig_b(idx).to<long double>();
      const long double c = eig_c(idx).to<long double>();
      CHECK(std::abs(naive_cos_sum(n, s, 1) - b) <= 1e-14L * sigma(n, 1).to<long double>());
      CHECK(std::abs(naive_cos_sum(n, s, 2) - c) <= 1e-14L * sigma(n, 2).to<long double>());
    }
  }
}

TEST_CASE("cot_sin_rhs") {
  CHECK(cot_sin_rhs(3, 1) == 1);
  CHECK(cot_sin_rhs(2, 1) == 0);
  CHECK(cot_sin_rhs(8, 4) == 0);
  CHECK_THROWS_AS(cot_sin_rhs(5, 5), std::domain_error);
  CHECK_THROWS_AS(cot_sin_rhs(5, 0), std::domain_error);
  CHECK_THROWS_AS(cot_sin_rhs(1, 1), std::domain_error);
}

TEST_CASE("closed spectra are sorted multisets") {
  CHECK(spectrum_closed(MatrixKind::B, 3) == std::vector<Rational>{q(-4, 3), q(-4, 3), q(8, 3)});
  CHECK(spectrum_closed(MatrixKind::A, 1) == std::vector<Rational>{Rational(0)});
  CHECK(spectrum_closed(MatrixKind::C, 2) == std::vector<Rational>{Rational(-1), Rational(1)});
  CHECK(spectrum_closed(MatrixKind::A, 4) ==
        std::vector<Rational>{Rational(-3), Rational(-1), Rational(1), Rational(3)});
  const auto b8 = spectrum_closed(MatrixKind::B, 8);
  CHECK(std::is_sorted(b8.begin(), b8.end()));
  CHECK(b8.size() == 8);
}

TEST_CASE("zero trace of every spectrum") {
  for (int n = 1; n <= 200; ++n) {
    for (auto kind : {MatrixKind::A, MatrixKind::B, MatrixKind::C}) {
      Rational total;
      for (const auto& v : spectrum_closed(kind, n)) total += v;
      CHECK(total == Rational(0));
    }
  }
}

TEST_CASE("trace identities") {
  const auto three = trace_identities(3);
  REQUIRE(three.size() == 5);
  CHECK(three[2].id == "trace-b2");
  CHECK(three[2].left == q(32, 3));
  CHECK(three[2].right == Rational(3) * sigma(3, 2));
  CHECK(three[3].left == q(128, 9));
  CHECK(three[3].right == Rational(3) * sigma(3, 3));

  for (const auto& t : trace_identities(1)) {
    CHECK(t.left == Rational(0));
    CHECK(t.right == Rational(0));
    CHECK(t.equal);
  }

  // independent route: plain Rational accumulation of the eigenvalues
  for (int n = 1; n <= 60; ++n) {
    Rational bb, bc, cc;
    for (int s = 1; s <= n; ++s) {
      const auto b = eig_b(SpectralIndex(n, s));
      const auto c = eig_c(SpectralIndex(n, s));
      bb += b * b;
      bc += b * c;
      cc += c * c;
    }
    const auto ids = trace_identities(n);
    CHECK(ids[2].left == bb);
    CHECK(ids[3].left == bc);
    CHECK(ids[4].left == cc);
    for (const auto& t : ids) CHECK(t.equal);
  }
}

TEST_CASE("matrix kind parsing") {
  CHECK(parse_matrix_kind("a") == MatrixKind::A);
  CHECK(parse_matrix_kind("C") == MatrixKind::C);
  CHECK(to_string(MatrixKind::B) == "B");
  CHECK_THROWS_AS(parse_matrix_kind("D"), std::invalid_argument);
  CHECK_THROWS_AS(parse_matrix_kind("AB"), std::invalid_argument);
}

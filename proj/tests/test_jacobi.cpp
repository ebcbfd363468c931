#include <doctest.h>

#include <algorithm>
#include <random>

#include "trigspectra/jacobi.hpp"

using namespace trigspectra;
using Complex = std::complex<double>;

namespace {

ComplexMatrix<double> random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal;
  ComplexMatrix<double> m(n, n);
  for (int j = 0; j < n; ++j) {
    m(j, j) = Complex(normal(rng), 0);
    for (int k = j + 1; k < n; ++k) {
      m(j, k) = Complex(normal(rng), normal(rng));
      m(k, j) = std::conj(m(j, k));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("hand eigenvalues") {
  ComplexMatrix<double> swap(2, 2);
  swap << 0, 1, 1, 0;
  const auto r = jacobi_eigenvalues(swap);
  REQUIRE(r.eigenvalues.size() == 2);
  CHECK(r.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(r.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-15));

  // [[2, i], [-i, 2]] has eigenvalues 1 and 3
  ComplexMatrix<double> h(2, 2);
  h << Complex(2, 0), Complex(0, 1), Complex(0, -1), Complex(2, 0);
  const auto rh = jacobi_eigenvalues(h);
  CHECK(rh.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rh.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-15));

  const auto b3 = jacobi_eigenvalues(build_b(3));
  CHECK(std::abs(b3.eigenvalues[0] + 4.0 / 3.0) <= 1e-12);
  CHECK(std::abs(b3.eigenvalues[1] + 4.0 / 3.0) <= 1e-12);
  CHECK(std::abs(b3.eigenvalues[2] - 8.0 / 3.0) <= 1e-12);

  const auto a4 = jacobi_eigenvalues(build_a(4));
  const double expected[] = {-3, -1, 1, 3};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(a4.eigenvalues[i] - expected[i]) <= 1e-12);

  const auto a1 = jacobi_eigenvalues(build_a(1));
  CHECK(a1.eigenvalues == std::vector<double>{0.0});
  CHECK(a1.sweeps == 0);
}

TEST_CASE("rejects non-Hermitian input") {
  ComplexMatrix<double> m(2, 2);
  m << 0, Complex(1, 1), Complex(1, 1), 0;
  CHECK_THROWS_AS(jacobi_eigenvalues(m), std::domain_error);
  CHECK_THROWS_AS(jacobi_eigenvalues(ComplexMatrix<double>(2, 3)), std::domain_error);
}

TEST_CASE("sweep budget exhaustion is an error") {
  std::mt19937_64 rng(7);
  RealMatrix<double> a = random_hermitian(rng, 12).real();
  a = (a + a.transpose()).eval();
  CHECK_THROWS_AS(jacobi_diagonalize(a, 1), ConvergenceError);
  try {
    RealMatrix<double> b = random_hermitian(rng, 12).real();
    b = (b + b.transpose()).eval();
    jacobi_diagonalize(b, 1);
  } catch (const ConvergenceError& e) {
    CHECK(e.remaining_off_mass() > 0);
  }
}

TEST_CASE("property: random Hermitian matrices keep trace and Frobenius norm") {
  // Eigenvalues of a Hermitian matrix satisfy sum = trace and
  // sum of squares = ||M||_F^2; both are independent of the solver.
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const auto m = random_hermitian(rng, n);
    const auto r = jacobi_eigenvalues(m);
    REQUIRE(r.eigenvalues.size() == static_cast<std::size_t>(n));
    CHECK(std::is_sorted(r.eigenvalues.begin(), r.eigenvalues.end()));
    double sum = 0, squares = 0;
    for (double v : r.eigenvalues) {
      sum += v;
      squares += v * v;
    }
    const double norm = m.norm();
    CHECK(std::abs(sum - m.trace().real()) <= 1e-12 * std::max(1.0, norm) * n);
    CHECK(std::abs(squares - norm * norm) <= 1e-12 * norm * norm);
    CHECK(r.pairing_gap <= 1e-12 * norm);
    CHECK(r.sweeps <= kJacobiMaxSweeps);
  }
}

TEST_CASE("property: diagonal conjugation leaves the spectrum unchanged") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> phase(0, 6.283185307179586);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 16);
    const auto m = random_hermitian(rng, n);
    ComplexVector<double> d(n);
    for (int j = 0; j < n; ++j) d(j) = std::polar(1.0, phase(rng));
    const ComplexMatrix<double> u = d.asDiagonal() * m * d.conjugate().asDiagonal();
    const ComplexMatrix<double> uh = (u + u.adjoint()) / 2.0;
    const auto e1 = jacobi_eigenvalues(m).eigenvalues;
    const auto e2 = jacobi_eigenvalues(uh).eigenvalues;
    for (int j = 0; j < n; ++j) CHECK(std::abs(e1[j] - e2[j]) <= 1e-12 * m.norm());
  }
}

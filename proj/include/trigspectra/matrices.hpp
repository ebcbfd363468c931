#pragma once

// Dense complex matrices A (1 + i cot), B (sin^-2) and C (sin^-4), the DFT
// test vectors that diagonalise them, and the small amount of dense linear
// algebra the checks need. All public indices (j, k, s) are 1-based; Eigen
// storage underneath is 0-based.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trigspectra/closed_form.hpp"
#include "trigspectra/summation.hpp"
#include "trigspectra/trig.hpp"

namespace trigspectra {

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using RealMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real frobenius_norm(
    const Eigen::MatrixBase<Derived>& m) {
  return m.norm();
}

/// max |m(j,k) - conj(m(k,j))|; domain error for non-square input.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermiticity_residual(
    const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.rows() != m.cols()) throw std::domain_error("hermiticity_residual: matrix is not square");
  Real worst{0};
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = j; k < m.cols(); ++k) {
      worst = std::max<Real>(worst, std::abs(m(j, k) - Eigen::numext::conj(m(k, j))));
    }
  }
  return worst;
}

/// Immutable n x n complex Hermitian matrix. The Frobenius norm and largest
/// entry modulus are computed once at construction.
template <typename Scalar = double>
class DenseHermitian {
 public:
  using Complex = std::complex<Scalar>;
  using Matrix = ComplexMatrix<Scalar>;

  /// Throws std::domain_error for empty, non-square, non-finite, or
  /// non-Hermitian (beyond 4 eps max|entry|) input.
  explicit DenseHermitian(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
      throw std::domain_error("DenseHermitian: matrix must be square and non-empty");
    }
    if (!entries_.allFinite()) throw std::domain_error("DenseHermitian: non-finite entry");
    max_abs_ = entries_.cwiseAbs().maxCoeff();
    norm_ = entries_.norm();
    const Scalar residual = hermiticity_residual(entries_);
    if (residual > hermitian_tolerance()) {
      throw std::domain_error("DenseHermitian: hermiticity residual " + std::to_string(double(residual)) +
                              " exceeds tolerance");
    }
  }

  Eigen::Index size() const { return entries_.rows(); }
  /// 1-based entry access.
  Complex entry(Eigen::Index j, Eigen::Index k) const {
    if (j < 1 || k < 1 || j > size() || k > size()) throw std::out_of_range("DenseHermitian::entry");
    return entries_(j - 1, k - 1);
  }
  const Matrix& matrix() const { return entries_; }
  Scalar frobenius_norm() const { return norm_; }
  Scalar max_abs_entry() const { return max_abs_; }
  /// Hermiticity tolerance 4 eps max|entry| used for validation.
  Scalar hermitian_tolerance() const {
    return 4 * std::numeric_limits<Scalar>::epsilon() * max_abs_;
  }

 private:
  Matrix entries_;
  Scalar max_abs_{0};
  Scalar norm_{0};
};

namespace detail {

// Fills an n x n circulant from its first-column generator: entry(j,k)
// depends only on d = (j - k) mod n, with d = 0 on the diagonal.
template <typename Scalar, typename Generator>
DenseHermitian<Scalar> circulant(std::int64_t n, Generator&& generator, const char* who) {
  if (n < 1) throw std::domain_error(std::string(who) + ": rank n must be >= 1");
  std::vector<std::complex<Scalar>> by_residue(static_cast<std::size_t>(n));
  for (std::int64_t d = 1; d < n; ++d) by_residue[static_cast<std::size_t>(d)] = generator(d);
  ComplexMatrix<Scalar> m(n, n);
  for (std::int64_t j = 0; j < n; ++j) {
    for (std::int64_t k = 0; k < n; ++k) {
      m(j, k) = by_residue[static_cast<std::size_t>(trig::detail::floor_mod(j - k, n))];
    }
  }
  return DenseHermitian<Scalar>(std::move(m));
}

}  // namespace detail

/// A(j,k) = 1 + i cot((j - k) pi / n) off the diagonal.
template <typename Scalar = double>
DenseHermitian<Scalar> build_a(std::int64_t n) {
  return detail::circulant<Scalar>(
      n, [n](std::int64_t d) { return std::complex<Scalar>(1, trig::cot_pi_ratio<Scalar>(d, n)); },
      "build_a");
}

/// B(j,k) = sin^-2((j - k) pi / n) off the diagonal.
template <typename Scalar = double>
DenseHermitian<Scalar> build_b(std::int64_t n) {
  return detail::circulant<Scalar>(
      n, [n](std::int64_t d) { return std::complex<Scalar>(trig::inv_sin_pow_pi_ratio<Scalar>(d, n, 1), 0); },
      "build_b");
}

/// C(j,k) = sin^-4((j - k) pi / n) off the diagonal.
template <typename Scalar = double>
DenseHermitian<Scalar> build_c(std::int64_t n) {
  return detail::circulant<Scalar>(
      n, [n](std::int64_t d) { return std::complex<Scalar>(trig::inv_sin_pow_pi_ratio<Scalar>(d, n, 2), 0); },
      "build_c");
}

template <typename Scalar = double>
DenseHermitian<Scalar> build_matrix(MatrixKind kind, std::int64_t n) {
  switch (kind) {
    case MatrixKind::A: return build_a<Scalar>(n);
    case MatrixKind::B: return build_b<Scalar>(n);
    case MatrixKind::C: return build_c<Scalar>(n);
  }
  throw std::logic_error("build_matrix: bad kind");
}

/// v_j = exp(-2 pi i s j / n), j = 1..n.
template <typename Scalar = double>
ComplexVector<Scalar> dft_eigenvector(std::int64_t n, std::int64_t s) {
  const SpectralIndex idx(n, s);
  ComplexVector<Scalar> v(n);
  for (std::int64_t j = 1; j <= n; ++j) {
    // 2 s j / n reduced mod 2 before it meets pi
    const std::int64_t num = trig::detail::floor_mod(2 * idx.s() * j, 2 * n);
    v(j - 1) = std::complex<Scalar>(trig::cos_pi_ratio<Scalar>(num, n),
                                    -trig::sin_pi_ratio<Scalar>(num, n));
  }
  return v;
}

template <typename Scalar>
ComplexVector<Scalar> matvec(const ComplexMatrix<Scalar>& m, const ComplexVector<Scalar>& v,
                             Precision precision = Precision::standard) {
  if (m.cols() != v.size()) throw std::domain_error("matvec: dimension mismatch");
  if (precision == Precision::standard) return m * v;
  ComplexVector<Scalar> out(m.rows());
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    ComplexAccumulator<Scalar> acc(precision);
    for (Eigen::Index k = 0; k < m.cols(); ++k) acc.add(m(j, k) * v(k));
    out(j) = acc.value();
  }
  return out;
}

template <typename Scalar>
ComplexVector<Scalar> matvec(const DenseHermitian<Scalar>& m, const ComplexVector<Scalar>& v,
                             Precision precision = Precision::standard) {
  return matvec<Scalar>(m.matrix(), v, precision);
}

/// General dense product; the product of two Hermitian matrices is not
/// Hermitian in general, so the result is a plain ComplexMatrix.
template <typename Scalar>
ComplexMatrix<Scalar> matmul(const ComplexMatrix<Scalar>& a, const ComplexMatrix<Scalar>& b,
                             Precision precision = Precision::standard) {
  if (a.cols() != b.rows()) throw std::domain_error("matmul: dimension mismatch");
  if (precision == Precision::standard) return a * b;
  ComplexMatrix<Scalar> out(a.rows(), b.cols());
  for (Eigen::Index j = 0; j < a.rows(); ++j) {
    for (Eigen::Index k = 0; k < b.cols(); ++k) {
      ComplexAccumulator<Scalar> acc(precision);
      for (Eigen::Index l = 0; l < a.cols(); ++l) acc.add(a(j, l) * b(l, k));
      out(j, k) = acc.value();
    }
  }
  return out;
}

template <typename Scalar>
ComplexMatrix<Scalar> matmul(const DenseHermitian<Scalar>& a, const DenseHermitian<Scalar>& b,
                             Precision precision = Precision::standard) {
  return matmul<Scalar>(a.matrix(), b.matrix(), precision);
}

template <typename Scalar>
Scalar frobenius_norm(const DenseHermitian<Scalar>& m) {
  return m.frobenius_norm();
}

template <typename Scalar>
Scalar hermiticity_residual(const DenseHermitian<Scalar>& m) {
  return hermiticity_residual(m.matrix());
}

namespace detail {

template <typename Scalar>
std::string shortest(Scalar value);

}  // namespace detail

/// Text dump: one row per line, entries "re +im i" / "re -im i" separated
/// by tabs, numbers in shortest round-trip form.
template <typename Scalar>
void write_text(std::ostream& os, const DenseHermitian<Scalar>& m) {
  for (Eigen::Index j = 0; j < m.size(); ++j) {
    for (Eigen::Index k = 0; k < m.size(); ++k) {
      const auto z = m.matrix()(j, k);
      if (k > 0) os << '\t';
      os << detail::shortest(z.real()) << ' ' << (z.imag() < 0 ? '-' : '+')
         << detail::shortest(std::abs(z.imag())) << 'i';
    }
    os << '\n';
  }
}

}  // namespace trigspectra

#include "trigspectra/detail/shortest.hpp"

#pragma once

// Cyclic Jacobi eigenvalue oracle for complex Hermitian matrices. It never
// looks at a closed form: the n x n Hermitian X + iY is embedded in the
// 2n x 2n real symmetric [[X, -Y], [Y, X]], diagonalised by plane rotations,
// and the doubled spectrum is folded back by pairing sorted neighbours.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "trigspectra/matrices.hpp"

namespace trigspectra {

/// Thrown when the sweep budget runs out before the off-diagonal mass
/// drops below the convergence threshold.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double remaining_off_mass)
      : std::runtime_error(what), remaining_off_mass_(remaining_off_mass) {}
  double remaining_off_mass() const { return remaining_off_mass_; }

 private:
  double remaining_off_mass_;
};

template <typename Scalar>
struct JacobiResult {
  std::vector<Scalar> eigenvalues;  // n values, ascending
  Scalar pairing_gap{0};            // largest gap inside a folded pair
  Scalar off_mass{0};               // off-diagonal Frobenius mass at exit
  int sweeps{0};
};

inline constexpr int kJacobiMaxSweeps = 30;

namespace detail {

template <typename Scalar>
Scalar off_diagonal_mass(const RealMatrix<Scalar>& a) {
  Scalar sum{0};
  for (Eigen::Index q = 1; q < a.cols(); ++q) {
    for (Eigen::Index p = 0; p < q; ++p) sum += a(p, q) * a(p, q);
  }
  return std::sqrt(2 * sum);
}

template <typename Scalar>
RealMatrix<Scalar> real_embedding(const ComplexMatrix<Scalar>& m) {
  const Eigen::Index n = m.rows();
  RealMatrix<Scalar> x = m.real();
  RealMatrix<Scalar> y = m.imag();
  RealMatrix<Scalar> e(2 * n, 2 * n);
  e.topLeftCorner(n, n) = x;
  e.topRightCorner(n, n) = -y;
  e.bottomLeftCorner(n, n) = y;
  e.bottomRightCorner(n, n) = x;
  // exact symmetry; the input is Hermitian only to within roundoff
  for (Eigen::Index q = 1; q < 2 * n; ++q) {
    for (Eigen::Index p = 0; p < q; ++p) {
      const Scalar mean = (e(p, q) + e(q, p)) / 2;
      e(p, q) = mean;
      e(q, p) = mean;
    }
  }
  return e;
}

// Annihilates a(p, q) with one rotation, updating rows and columns p, q.
template <typename Scalar>
void rotate(RealMatrix<Scalar>& a, Eigen::Index p, Eigen::Index q) {
  const Scalar apq = a(p, q);
  const Scalar theta = (a(q, q) - a(p, p)) / (2 * apq);
  Scalar t;
  if (std::abs(theta) > Scalar{1} / std::sqrt(std::numeric_limits<Scalar>::epsilon())) {
    t = Scalar{1} / (2 * theta);
  } else {
    t = Scalar{1} / (std::abs(theta) + std::sqrt(theta * theta + 1));
    if (theta < 0) t = -t;
  }
  const Scalar c = Scalar{1} / std::sqrt(t * t + 1);
  const Scalar s = t * c;
  const Scalar tau = s / (1 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0;
  a(q, p) = 0;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    if (r == p || r == q) continue;
    const Scalar g = a(r, p);
    const Scalar h = a(r, q);
    const Scalar rp = g - s * (h + g * tau);
    const Scalar rq = h + s * (g - h * tau);
    a(r, p) = rp;
    a(p, r) = rp;
    a(r, q) = rq;
    a(q, r) = rq;
  }
}

}  // namespace detail

/// Cyclic Jacobi on a real symmetric matrix, in place. Stops once the
/// off-diagonal Frobenius mass is <= eps * ||a||_F; runs at most
/// `max_sweeps` sweeps and throws ConvergenceError otherwise. Returns the
/// number of sweeps performed.
template <typename Scalar>
int jacobi_diagonalize(RealMatrix<Scalar>& a, int max_sweeps = kJacobiMaxSweeps) {
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar threshold = eps * a.norm();
  for (int sweep = 0;; ++sweep) {
    const Scalar off = detail::off_diagonal_mass(a);
    if (off <= threshold) return sweep;
    if (sweep == max_sweeps) {
      throw ConvergenceError("jacobi: no convergence after " + std::to_string(max_sweeps) +
                                 " sweeps, off-diagonal mass " + std::to_string(double(off)),
                             static_cast<double>(off));
    }
    for (Eigen::Index p = 0; p + 1 < a.rows(); ++p) {
      for (Eigen::Index q = p + 1; q < a.rows(); ++q) {
        const Scalar apq = std::abs(a(p, q));
        if (apq == 0) continue;
        // negligible against both diagonal entries: drop it outright
        if (sweep > 3 && std::abs(a(p, p)) + 100 * apq == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + 100 * apq == std::abs(a(q, q))) {
          a(p, q) = 0;
          a(q, p) = 0;
          continue;
        }
        detail::rotate(a, p, q);
      }
    }
  }
}

/// Eigenvalues of a complex Hermitian matrix via the real embedding.
/// Throws std::domain_error for non-square input or a hermiticity residual
/// above 4 eps max|entry|, ConvergenceError on sweep exhaustion.
template <typename Scalar>
JacobiResult<Scalar> jacobi_eigenvalues(const ComplexMatrix<Scalar>& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::domain_error("jacobi_eigenvalues: matrix must be square and non-empty");
  }
  const Scalar max_abs = m.cwiseAbs().maxCoeff();
  if (hermiticity_residual(m) > 4 * std::numeric_limits<Scalar>::epsilon() * max_abs) {
    throw std::domain_error("jacobi_eigenvalues: input is not Hermitian");
  }
  RealMatrix<Scalar> a = detail::real_embedding(m);
  JacobiResult<Scalar> result;
  result.sweeps = jacobi_diagonalize(a);
  result.off_mass = detail::off_diagonal_mass(a);

  std::vector<Scalar> doubled(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) doubled[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(doubled.begin(), doubled.end());
  result.eigenvalues.reserve(doubled.size() / 2);
  for (std::size_t i = 0; i < doubled.size(); i += 2) {
    result.pairing_gap = std::max(result.pairing_gap, doubled[i + 1] - doubled[i]);
    result.eigenvalues.push_back((doubled[i] + doubled[i + 1]) / 2);
  }
  return result;
}

template <typename Scalar>
JacobiResult<Scalar> jacobi_eigenvalues(const DenseHermitian<Scalar>& m) {
  return jacobi_eigenvalues<Scalar>(m.matrix());
}

}  // namespace trigspectra

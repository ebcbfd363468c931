#pragma once

// Brute-force oracles. Each function evaluates one side of a sum rule or a
// matrix identity directly from trigonometric values so it can be compared
// with the exact closed forms in closed_form.hpp.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigspectra/closed_form.hpp"
#include "trigspectra/jacobi.hpp"
#include "trigspectra/matrices.hpp"
#include "trigspectra/summation.hpp"
#include "trigspectra/trig.hpp"

namespace trigspectra {

/// Outcome of one check. `pass` is always measured <= tolerance.
struct ResidualReport {
  std::string id;
  std::int64_t n = 0;
  std::vector<std::int64_t> params;
  double measured = 0;
  double tolerance = 0;
  bool pass = false;

  ResidualReport() = default;
  ResidualReport(std::string id_, std::int64_t n_, std::vector<std::int64_t> params_, double measured_,
                 double tolerance_)
      : id(std::move(id_)), n(n_), params(std::move(params_)), measured(measured_),
        tolerance(tolerance_), pass(measured_ <= tolerance_) {}
};

/// Roundoff model for an n-term trigonometric sum whose largest summand
/// has magnitude `max_term`: 64 eps n max_term.
template <typename Scalar = double>
Scalar sum_rule_tolerance(std::int64_t n, Scalar max_term) {
  return 64 * std::numeric_limits<Scalar>::epsilon() * static_cast<Scalar>(n) * max_term;
}

namespace detail {

inline void require_sum_rank(std::int64_t n, const char* who) {
  if (n < 2) throw std::domain_error(std::string(who) + ": requires n >= 2");
}

inline void require_range(std::int64_t value, std::int64_t lo, std::int64_t hi, const char* who,
                          const char* name) {
  if (value < lo || value > hi) {
    throw std::domain_error(std::string(who) + ": " + name + " = " + std::to_string(value) +
                            " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

inline void require_order(int p, const char* who) {
  if (p < 1 || p > 4) {
    throw std::domain_error(std::string(who) + ": order p = " + std::to_string(p) + " outside {1, 2, 3, 4}");
  }
}

}  // namespace detail

/// sum_{k=1}^{n-1} cot(k pi / n) sin(2 s k pi / n), 1 <= s <= n - 1.
template <typename Scalar = double>
SumStats<Scalar> brute_sum_cot_sin(std::int64_t n, std::int64_t s,
                                   Precision precision = Precision::standard) {
  detail::require_sum_rank(n, "brute_sum_cot_sin");
  detail::require_range(s, 1, n - 1, "brute_sum_cot_sin", "s");
  return paired_sum<Scalar>(
      n,
      [&](std::int64_t k) {
        return trig::cot_pi_ratio<Scalar>(k, n) * trig::sin_pi_ratio<Scalar>(2 * s * k, n);
      },
      precision);
}

/// sum_{k=1}^{n-1} sin^{-2p}(k pi / n) cos(2 s k pi / n) for p in {1, 2},
/// 1 <= s <= n.
template <typename Scalar = double>
SumStats<Scalar> brute_sum_inv_sin_cos(std::int64_t n, std::int64_t s, int p,
                                       Precision precision = Precision::standard) {
  detail::require_sum_rank(n, "brute_sum_inv_sin_cos");
  detail::require_range(s, 1, n, "brute_sum_inv_sin_cos", "s");
  if (p != 1 && p != 2) throw std::domain_error("brute_sum_inv_sin_cos: p must be 1 or 2");
  return paired_sum<Scalar>(
      n,
      [&](std::int64_t k) {
        return trig::inv_sin_pow_pi_ratio<Scalar>(k, n, p) * trig::cos_pi_ratio<Scalar>(2 * s * k, n);
      },
      precision);
}

template <typename Scalar = double>
SumStats<Scalar> brute_sum_inv_sin2_cos(std::int64_t n, std::int64_t s,
                                        Precision precision = Precision::standard) {
  return brute_sum_inv_sin_cos<Scalar>(n, s, 1, precision);
}

template <typename Scalar = double>
SumStats<Scalar> brute_sum_inv_sin4_cos(std::int64_t n, std::int64_t s,
                                        Precision precision = Precision::standard) {
  return brute_sum_inv_sin_cos<Scalar>(n, s, 2, precision);
}

/// sum_{k=1}^{n-1} sin^{-2p}(k pi / n), p in 1..4.
template <typename Scalar = double>
SumStats<Scalar> brute_power_sum(std::int64_t n, int p, Precision precision = Precision::standard) {
  detail::require_sum_rank(n, "brute_power_sum");
  detail::require_order(p, "brute_power_sum");
  return paired_sum<Scalar>(
      n, [&](std::int64_t k) { return trig::inv_sin_pow_pi_ratio<Scalar>(k, n, p); }, precision);
}

/// |sum_{k != j} sin^{-2p}((j - k) pi / n) - sum_{k=1}^{n-1} sin^{-2p}(k pi / n)|.
/// The row sum runs over k in natural order without any residue folding.
template <typename Scalar = double>
Scalar row_shift_check(std::int64_t n, std::int64_t j, int p, Precision precision = Precision::standard) {
  if (n < 1) throw std::domain_error("row_shift_check: requires n >= 1");
  detail::require_range(j, 1, n, "row_shift_check", "j");
  detail::require_order(p, "row_shift_check");
  if (n == 1) return Scalar{0};
  Accumulator<Scalar> row(precision);
  for (std::int64_t k = 1; k <= n; ++k) {
    if (k != j) row.add(trig::inv_sin_pow_pi_ratio<Scalar>(j - k, n, p));
  }
  return std::abs(row.value() - brute_power_sum<Scalar>(n, p, precision).value);
}

/// Smallest |sin| accepted by cot_identity_residual before an argument
/// counts as a pole.
template <typename Scalar = double>
constexpr Scalar pole_threshold() {
  return Scalar{1e-8};
}

/// |cot a cot b + 1 + (cot a - cot b) cot(a - b)| for angles in radians.
template <typename Scalar = double>
Scalar cot_identity_residual(Scalar alpha, Scalar beta) {
  auto cot = [](Scalar x, const char* name) {
    const Scalar s = std::sin(x);
    if (!(std::abs(s) >= pole_threshold<Scalar>())) {
      throw std::domain_error(std::string("cot_identity_residual: ") + name + " is at a pole of cot");
    }
    return std::cos(x) / s;
  };
  const Scalar ca = cot(alpha, "alpha");
  const Scalar cb = cot(beta, "beta");
  const Scalar cab = cot(alpha - beta, "alpha - beta");
  return std::abs(ca * cb + 1 + (ca - cb) * cab);
}

/// |sum_{k=1}^{n-1} cot(k pi / n)|, with the total summand magnitude.
template <typename Scalar = double>
SumStats<Scalar> cot_zero_sum(std::int64_t n, Precision precision = Precision::standard) {
  detail::require_sum_rank(n, "cot_zero_sum");
  auto stats = paired_sum<Scalar>(
      n, [&](std::int64_t k) { return trig::cot_pi_ratio<Scalar>(k, n); }, precision);
  stats.value = std::abs(stats.value);
  return stats;
}

/// Relative residual of the sin^-2 convolution rule at (j, k), j != k:
/// |L - R| / max(|L|, |R|) with
///   L = sum_{l != j, k} sin^-2((j - l) pi / n) sin^-2((k - l) pi / n)
///   R = 2 (2 + sigma^(1)) sin^-2((j - k) pi / n) - 6 sin^-4((j - k) pi / n).
/// Returns 0 when both sides vanish (n = 2: empty sum against R = 0).
template <typename Scalar = double>
Scalar convolution_identity_residual(std::int64_t n, std::int64_t j, std::int64_t k,
                                     Precision precision = Precision::standard) {
  detail::require_sum_rank(n, "convolution_identity_residual");
  detail::require_range(j, 1, n, "convolution_identity_residual", "j");
  detail::require_range(k, 1, n, "convolution_identity_residual", "k");
  if (j == k) throw std::domain_error("convolution_identity_residual: requires j != k");

  Accumulator<Scalar> left(precision);
  for (std::int64_t l = 1; l <= n; ++l) {
    if (l == j || l == k) continue;
    left.add(trig::inv_sin_pow_pi_ratio<Scalar>(j - l, n, 1) * trig::inv_sin_pow_pi_ratio<Scalar>(k - l, n, 1));
  }
  const Scalar s2 = trig::inv_sin_pow_pi_ratio<Scalar>(j - k, n, 1);
  const Scalar s4 = trig::inv_sin_pow_pi_ratio<Scalar>(j - k, n, 2);
  const Scalar sigma1 = sigma(n, 1).to<Scalar>();
  const Scalar lhs = left.value();
  const Scalar rhs = 2 * (2 + sigma1) * s2 - 6 * s4;
  const Scalar scale = std::max(std::abs(lhs), std::abs(rhs));
  const Scalar diff = std::abs(lhs - rhs);
  if (diff == 0) return Scalar{0};
  return diff / scale;
}

/// Modulus of sum_{k=1}^{n-1} cot(k pi / n) |sin(k pi / n)|^p for complex p,
/// with |sin|^p = exp(p ln|sin|) on the principal real logarithm.
/// `max_term` / `abs_total` report the summand moduli.
template <typename Scalar = double>
SumStats<Scalar> cot_abs_sin_power_sum(std::int64_t n, std::complex<Scalar> p,
                                       Precision precision = Precision::standard) {
  detail::require_sum_rank(n, "cot_abs_sin_power_sum");
  if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
    throw std::domain_error("cot_abs_sin_power_sum: exponent must be finite");
  }
  ComplexAccumulator<Scalar> acc(precision);
  Accumulator<Scalar> magnitude(precision);
  SumStats<Scalar> stats;
  auto term = [&](std::int64_t k) {
    const Scalar s = std::abs(trig::sin_pi_ratio<Scalar>(k, n));
    const std::complex<Scalar> t = trig::cot_pi_ratio<Scalar>(k, n) * std::exp(p * std::log(s));
    stats.max_term = std::max(stats.max_term, std::abs(t));
    magnitude.add(std::abs(t));
    return t;
  };
  for (std::int64_t k = 1; 2 * k < n; ++k) acc.add(term(k) + term(n - k));
  if (n % 2 == 0) acc.add(term(n / 2));
  stats.value = std::abs(acc.value());
  stats.abs_total = magnitude.value();
  return stats;
}

/// ||M v - lambda v||_2 / (||M||_F ||v||_2); zero vector is a domain error.
/// A zero matrix (n = 1) gives the unnormalised residual.
template <typename Scalar = double>
Scalar eigenpair_residual(const DenseHermitian<Scalar>& m, const ComplexVector<Scalar>& v, Scalar lambda,
                          Precision precision = Precision::standard) {
  if (v.size() != m.size()) throw std::domain_error("eigenpair_residual: dimension mismatch");
  const Scalar vnorm = v.norm();
  if (vnorm == 0) throw std::domain_error("eigenpair_residual: zero vector");
  const ComplexVector<Scalar> r = matvec(m, v, precision) - lambda * v;
  const Scalar scale = m.frobenius_norm() > 0 ? m.frobenius_norm() * vnorm : vnorm;
  return r.norm() / scale;
}

/// ||B - (A^2 + 2A - sigma^(1) I) / 2||_F / ||B||_F; 0 for n = 1.
template <typename Scalar = double>
Scalar identity_b_residual(std::int64_t n, Precision precision = Precision::standard) {
  if (n < 1) throw std::domain_error("identity_b_residual: requires n >= 1");
  if (n == 1) return Scalar{0};
  const auto a = build_a<Scalar>(n);
  const auto b = build_b<Scalar>(n);
  const Scalar sigma1 = sigma(n, 1).to<Scalar>();
  ComplexMatrix<Scalar> rhs = matmul(a, a, precision) + Scalar{2} * a.matrix();
  rhs.diagonal().array() -= sigma1;
  const ComplexMatrix<Scalar> residual = b.matrix() - Scalar{0.5} * rhs;
  return residual.norm() / b.frobenius_norm();
}

/// ||C + (B^2 - 2 (2 + sigma^(1)) B - sigma^(2) I) / 6||_F / ||C||_F; 0 for n = 1.
template <typename Scalar = double>
Scalar identity_c_residual(std::int64_t n, Precision precision = Precision::standard) {
  if (n < 1) throw std::domain_error("identity_c_residual: requires n >= 1");
  if (n == 1) return Scalar{0};
  const auto b = build_b<Scalar>(n);
  const auto c = build_c<Scalar>(n);
  const Scalar sigma1 = sigma(n, 1).to<Scalar>();
  const Scalar sigma2 = sigma(n, 2).to<Scalar>();
  ComplexMatrix<Scalar> inner = matmul(b, b, precision) - (2 * (2 + sigma1)) * b.matrix();
  inner.diagonal().array() -= sigma2;
  const ComplexMatrix<Scalar> residual = c.matrix() + inner / Scalar{6};
  return residual.norm() / c.frobenius_norm();
}

template <typename Scalar = double>
struct SpectrumComparison {
  std::int64_t n = 0;
  std::vector<Scalar> closed;    // closed forms rounded to Scalar, ascending
  std::vector<Scalar> computed;  // Jacobi eigenvalues, ascending
  Scalar max_abs_deviation{0};
  Scalar scale{0};  // ||M||_F
  Scalar pairing_gap{0};
  /// Computed values clustered within the comparison tolerance reproduce
  /// the exact multiplicities of the closed-form multiset.
  bool multiplicity_match = false;
  std::int64_t multiplicity_mismatches = 0;
};

/// Relative factor of the spectrum comparison tolerance: deviations are
/// judged against 1e-9 ||M||_F.
inline constexpr double kSpectrumRelativeTolerance = 1e-9;

template <typename Scalar = double>
SpectrumComparison<Scalar> compare_spectrum(MatrixKind kind, std::int64_t n) {
  const auto m = build_matrix<Scalar>(kind, n);
  const auto exact = spectrum_closed(kind, n);
  const auto oracle = jacobi_eigenvalues(m);

  SpectrumComparison<Scalar> out;
  out.n = n;
  out.scale = m.frobenius_norm();
  out.pairing_gap = oracle.pairing_gap;
  out.computed = oracle.eigenvalues;
  out.closed.reserve(exact.size());
  for (const auto& r : exact) out.closed.push_back(r.to<Scalar>());
  for (std::size_t i = 0; i < exact.size(); ++i) {
    out.max_abs_deviation = std::max(out.max_abs_deviation, std::abs(out.closed[i] - out.computed[i]));
  }

  // exact multiplicities vs. clusters of computed values
  const Scalar tol = static_cast<Scalar>(kSpectrumRelativeTolerance) * out.scale;
  std::vector<std::size_t> exact_runs, computed_runs;
  for (std::size_t i = 0; i < exact.size();) {
    std::size_t j = i + 1;
    while (j < exact.size() && exact[j] == exact[i]) ++j;
    exact_runs.push_back(j - i);
    i = j;
  }
  for (std::size_t i = 0; i < out.computed.size();) {
    std::size_t j = i + 1;
    while (j < out.computed.size() && out.computed[j] - out.computed[j - 1] <= tol) ++j;
    computed_runs.push_back(j - i);
    i = j;
  }
  const std::size_t common = std::min(exact_runs.size(), computed_runs.size());
  std::int64_t mismatches = static_cast<std::int64_t>(std::max(exact_runs.size(), computed_runs.size()) - common);
  for (std::size_t i = 0; i < common; ++i) mismatches += exact_runs[i] != computed_runs[i] ? 1 : 0;
  out.multiplicity_mismatches = mismatches;
  out.multiplicity_match = mismatches == 0;
  return out;
}

}  // namespace trigspectra

#pragma once

// Exact closed forms: eigenvalues of the cot / inverse-sine circulant
// matrices, the power-sum constants sigma_n^(p), and the trace identities
// they satisfy. Everything here is exact; nothing rounds.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trigspectra/rational.hpp"

namespace trigspectra {

enum class MatrixKind { A, B, C };

std::string_view to_string(MatrixKind kind);
/// Accepts "A", "B", "C" (case-insensitive); throws std::invalid_argument otherwise.
MatrixKind parse_matrix_kind(std::string_view text);

/// Rank n >= 1 and spectral index 1 <= s <= n.
class SpectralIndex {
 public:
  /// Throws std::domain_error when n < 1 or s is outside [1, n].
  SpectralIndex(std::int64_t n, std::int64_t s);

  std::int64_t n() const { return n_; }
  std::int64_t s() const { return s_; }

 private:
  std::int64_t n_;
  std::int64_t s_;
};

/// sigma_n^(p) = sum_{k=1}^{n-1} sin^{-2p}(k pi / n) for p in 1..4.
/// p = 3, 4 are built on p = 1, 2 by the bracketed polynomial factor.
Rational sigma(std::int64_t n, int p);

/// Eigenvalue of A on the s-th DFT vector: 2s - n - 1.
std::int64_t eig_a(const SpectralIndex& idx);
/// sigma^(1) - 2 s (n - s)
Rational eig_b(const SpectralIndex& idx);
/// sigma^(2) - 2 s (n - s) (s (n - s) + 2) / 3
Rational eig_c(const SpectralIndex& idx);
Rational eigenvalue(MatrixKind kind, const SpectralIndex& idx);

/// Right side of the cot*sin sum rule, n - 2s. Requires n >= 2 and
/// 1 <= s <= n - 1; s = n is rejected because the rule does not extend there.
std::int64_t cot_sin_rhs(std::int64_t n, std::int64_t s);

/// All n closed-form eigenvalues, ascending, with multiplicities kept.
std::vector<Rational> spectrum_closed(MatrixKind kind, std::int64_t n);

struct TraceIdentity {
  std::string id;
  Rational left;
  Rational right;
  bool equal = false;
};

/// sum b = 0, sum c = 0, sum b^2 = n sigma^(2), sum b c = n sigma^(3),
/// sum c^2 = n sigma^(4), each evaluated exactly from the eigenvalue
/// formulas.
std::vector<TraceIdentity> trace_identities(std::int64_t n);

}  // namespace trigspectra

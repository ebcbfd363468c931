#include "trigspectra/closed_form.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace trigspectra {

namespace {

void require_rank(std::int64_t n, const char* where) {
  if (n < 1) throw std::domain_error(std::string(where) + ": rank n must be >= 1");
}

// s (n - s) as an exact integer
Rational pair_product(const SpectralIndex& idx) {
  return Rational(BigInt(idx.s()) * BigInt(idx.n() - idx.s()));
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::A: return "A";
    case MatrixKind::B: return "B";
    case MatrixKind::C: return "C";
  }
  return "?";
}

MatrixKind parse_matrix_kind(std::string_view text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'A': return MatrixKind::A;
      case 'B': return MatrixKind::B;
      case 'C': return MatrixKind::C;
      default: break;
    }
  }
  throw std::invalid_argument("unknown matrix kind '" + std::string(text) + "' (expected A, B or C)");
}

SpectralIndex::SpectralIndex(std::int64_t n, std::int64_t s) : n_(n), s_(s) {
  require_rank(n, "SpectralIndex");
  if (s < 1 || s > n) {
    throw std::domain_error("SpectralIndex: s = " + std::to_string(s) + " outside [1, " +
                            std::to_string(n) + "]");
  }
}

Rational sigma(std::int64_t n, int p) {
  require_rank(n, "sigma");
  const BigInt n2 = BigInt(n) * n;
  const BigInt n4 = n2 * n2;
  switch (p) {
    case 1: return Rational(n2 - 1, 3);
    case 2: return Rational((n2 - 1) * (n2 + 11), 45);
    case 3: return sigma(n, 1) * Rational(2 * n4 + 23 * n2 + 191, 315);
    case 4: return sigma(n, 2) * Rational(3 * n4 + 10 * n2 + 227, 315);
    default:
      throw std::domain_error("sigma: order p = " + std::to_string(p) + " outside {1, 2, 3, 4}");
  }
}

std::int64_t eig_a(const SpectralIndex& idx) { return 2 * idx.s() - idx.n() - 1; }

Rational eig_b(const SpectralIndex& idx) {
  return sigma(idx.n(), 1) - Rational(2) * pair_product(idx);
}

Rational eig_c(const SpectralIndex& idx) {
  const Rational u = pair_product(idx);
  return sigma(idx.n(), 2) - Rational(2) * u * (u + Rational(2)) / Rational(3);
}

Rational eigenvalue(MatrixKind kind, const SpectralIndex& idx) {
  switch (kind) {
    case MatrixKind::A: return Rational(eig_a(idx));
    case MatrixKind::B: return eig_b(idx);
    case MatrixKind::C: return eig_c(idx);
  }
  throw std::logic_error("eigenvalue: bad kind");
}

std::int64_t cot_sin_rhs(std::int64_t n, std::int64_t s) {
  if (n < 2) throw std::domain_error("cot_sin_rhs: requires n >= 2");
  if (s < 1 || s > n - 1) {
    throw std::domain_error("cot_sin_rhs: s = " + std::to_string(s) + " outside [1, " +
                            std::to_string(n - 1) + "]");
  }
  return n - 2 * s;
}

std::vector<Rational> spectrum_closed(MatrixKind kind, std::int64_t n) {
  require_rank(n, "spectrum_closed");
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(n));
  for (std::int64_t s = 1; s <= n; ++s) values.push_back(eigenvalue(kind, SpectralIndex(n, s)));
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<TraceIdentity> trace_identities(std::int64_t n) {
  require_rank(n, "trace_identities");
  // Each b_s is an integer over 3 and each c_s an integer over 45, so the
  // sums are accumulated on those common denominators and reduced once.
  const Rational three(3), forty_five(45);
  BigInt sum_b = 0, sum_c = 0, sum_bb = 0, sum_bc = 0, sum_cc = 0;
  for (std::int64_t s = 1; s <= n; ++s) {
    const SpectralIndex idx(n, s);
    const Rational b = eig_b(idx) * three;
    const Rational c = eig_c(idx) * forty_five;
    if (!b.is_integer() || !c.is_integer()) {
      throw std::logic_error("trace_identities: eigenvalue denominators out of model");
    }
    const BigInt bi = b.numerator();
    const BigInt ci = c.numerator();
    sum_b += bi;
    sum_c += ci;
    sum_bb += bi * bi;
    sum_bc += bi * ci;
    sum_cc += ci * ci;
  }
  const Rational rank(n);
  auto make = [](std::string id, Rational left, Rational right) {
    const bool equal = left == right;
    return TraceIdentity{std::move(id), std::move(left), std::move(right), equal};
  };
  std::vector<TraceIdentity> out;
  out.push_back(make("trace-sum-b", Rational(sum_b, 3), Rational(0)));
  out.push_back(make("trace-sum-c", Rational(sum_c, 45), Rational(0)));
  out.push_back(make("trace-b2", Rational(sum_bb, 9), rank * sigma(n, 2)));
  out.push_back(make("trace-bc", Rational(sum_bc, 135), rank * sigma(n, 3)));
  out.push_back(make("trace-c2", Rational(sum_cc, 2025), rank * sigma(n, 4)));
  return out;
}

}  // namespace trigspectra

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace trigspectra {

/// Accumulation mode for dot products, matrix products and brute-force sums.
enum class Precision { standard, compensated };

/// Neumaier's variant of Kahan summation: the running compensation also
/// captures the error when the incoming term is larger than the sum.
template <typename Scalar>
class NeumaierAccumulator {
 public:
  void add(Scalar value) {
    const Scalar t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  NeumaierAccumulator& operator+=(Scalar value) {
    add(value);
    return *this;
  }
  Scalar value() const { return sum_ + compensation_; }

 private:
  Scalar sum_{0};
  Scalar compensation_{0};
};

/// Real accumulator that is either plain or compensated at runtime.
template <typename Scalar>
class Accumulator {
 public:
  explicit Accumulator(Precision precision = Precision::standard) : precision_(precision) {}

  void add(Scalar value) {
    if (precision_ == Precision::compensated) {
      compensated_.add(value);
    } else {
      plain_ += value;
    }
  }
  Accumulator& operator+=(Scalar value) {
    add(value);
    return *this;
  }
  Scalar value() const {
    return precision_ == Precision::compensated ? compensated_.value() : plain_;
  }

 private:
  Precision precision_;
  Scalar plain_{0};
  NeumaierAccumulator<Scalar> compensated_;
};

template <typename Scalar>
class ComplexAccumulator {
 public:
  explicit ComplexAccumulator(Precision precision = Precision::standard)
      : re_(precision), im_(precision) {}

  void add(const std::complex<Scalar>& value) {
    re_.add(value.real());
    im_.add(value.imag());
  }
  ComplexAccumulator& operator+=(const std::complex<Scalar>& value) {
    add(value);
    return *this;
  }
  std::complex<Scalar> value() const { return {re_.value(), im_.value()}; }

 private:
  Accumulator<Scalar> re_;
  Accumulator<Scalar> im_;
};

/// Statistics of a brute-force trigonometric sum: the value, the largest
/// summand magnitude and the total summand magnitude.
template <typename Scalar>
struct SumStats {
  Scalar value{0};
  Scalar max_term{0};
  Scalar abs_total{0};
};

/// Sums term(k) for k = 1..n-1 grouping k with n - k before accumulating;
/// the unpaired middle term (even n) goes in last.
template <typename Scalar, typename Term>
SumStats<Scalar> paired_sum(std::int64_t n, Term&& term, Precision precision) {
  SumStats<Scalar> stats;
  Accumulator<Scalar> acc(precision);
  Accumulator<Scalar> magnitude(precision);
  auto note = [&](Scalar t) {
    const Scalar a = std::abs(t);
    if (a > stats.max_term) stats.max_term = a;
    magnitude.add(a);
  };
  for (std::int64_t k = 1; 2 * k < n; ++k) {
    const Scalar lo = term(k);
    const Scalar hi = term(n - k);
    note(lo);
    note(hi);
    acc.add(lo + hi);
  }
  if (n % 2 == 0 && n >= 2) {
    const Scalar mid = term(n / 2);
    note(mid);
    acc.add(mid);
  }
  stats.value = acc.value();
  stats.abs_total = magnitude.value();
  return stats;
}

}  // namespace trigspectra

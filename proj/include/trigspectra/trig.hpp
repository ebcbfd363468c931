#pragma once

// sin / cos / cot of pi * num / den with the angle reduced exactly in
// integer arithmetic before it is ever multiplied by pi. The reduction maps
// every argument into [0, pi/4], so symmetric angles (x vs pi - x, x vs -x)
// produce bit-identical magnitudes. Evaluation runs in long double and is
// rounded to Scalar once at the end.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace trigspectra::trig {

namespace detail {

template <typename Scalar>
using wide_t = std::conditional_t<(sizeof(Scalar) < sizeof(long double)), long double, Scalar>;

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

template <typename Scalar>
Scalar sin_pi_ratio_impl(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::domain_error("sin_pi_ratio: denominator must be positive");
  std::int64_t r = floor_mod(num, 2 * den);
  Scalar sign{1};
  if (r >= den) {  // sin(x + pi) = -sin x
    r -= den;
    sign = -sign;
  }
  if (2 * r > den) r = den - r;  // sin(pi - x) = sin x
  const Scalar pi = std::numbers::pi_v<Scalar>;
  if (4 * r > den) {
    // sin(pi x) = cos(pi (1/2 - x)), 1/2 - r/den = (den - 2r) / (2 den)
    const Scalar t = static_cast<Scalar>(den - 2 * r) / static_cast<Scalar>(2 * den);
    return sign * std::cos(pi * t);
  }
  const Scalar t = static_cast<Scalar>(r) / static_cast<Scalar>(den);
  return sign * std::sin(pi * t);
}

}  // namespace detail

/// sin(pi * num / den), den > 0.
template <typename Scalar>
Scalar sin_pi_ratio(std::int64_t num, std::int64_t den) {
  return static_cast<Scalar>(detail::sin_pi_ratio_impl<detail::wide_t<Scalar>>(num, den));
}

/// cos(pi * num / den) = sin(pi * (2 num + den) / (2 den)).
template <typename Scalar>
Scalar cos_pi_ratio(std::int64_t num, std::int64_t den) {
  return sin_pi_ratio<Scalar>(2 * num + den, 2 * den);
}

/// cot(pi * num / den); domain error where sin vanishes.
template <typename Scalar>
Scalar cot_pi_ratio(std::int64_t num, std::int64_t den) {
  using Wide = detail::wide_t<Scalar>;
  const Wide s = detail::sin_pi_ratio_impl<Wide>(num, den);
  if (s == Wide{0}) {
    throw std::domain_error("cot_pi_ratio: pole at " + std::to_string(num) + "/" +
                            std::to_string(den) + " * pi");
  }
  return static_cast<Scalar>(detail::sin_pi_ratio_impl<Wide>(2 * num + den, 2 * den) / s);
}

/// sin^{-2p}(pi * num / den) evaluated as (1/sin^2)^p.
template <typename Scalar>
Scalar inv_sin_pow_pi_ratio(std::int64_t num, std::int64_t den, int p) {
  using Wide = detail::wide_t<Scalar>;
  const Wide s = detail::sin_pi_ratio_impl<Wide>(num, den);
  if (s == Wide{0}) {
    throw std::domain_error("inv_sin_pow_pi_ratio: pole at " + std::to_string(num) + "/" +
                            std::to_string(den) + " * pi");
  }
  const Wide inv2 = Wide{1} / (s * s);
  Wide out{1};
  for (int i = 0; i < p; ++i) out *= inv2;
  return static_cast<Scalar>(out);
}

}  // namespace trigspectra::trig

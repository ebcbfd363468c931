#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace trigspectra::detail {

/// Shortest decimal that round-trips to `value`; negative zero prints as "0".
template <typename Scalar>
std::string shortest(Scalar value) {
  if (value == Scalar{0}) value = Scalar{0};
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) return std::to_string(value);
  return std::string(buffer, end);
}

}  // namespace trigspectra::detail

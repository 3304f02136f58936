#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

namespace deepvote::detail {

inline std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

inline std::optional<std::int64_t> checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
  return out;
}

inline std::optional<std::int64_t> checked_pow(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int k = 0; k < exponent; ++k) {
    auto next = checked_mul(out, base);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

/// Positive integer value of x, if x is one (and fits an int).
inline std::optional<int> as_positive_int(double x) {
  if (!std::isfinite(x) || x < 1.0 || x > 1e6) return std::nullopt;
  const double r = std::round(x);
  if (r != x) return std::nullopt;
  return static_cast<int>(r);
}

inline bool is_integer(double x) { return std::isfinite(x) && std::round(x) == x; }

}  // namespace deepvote::detail

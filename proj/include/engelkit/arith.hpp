#pragma once

#include <cstdint>

#include "engelkit/errors.hpp"

namespace engelkit::arith {

inline std::int64_t mod(std::int64_t v, std::int64_t m) {
  auto r = v % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(
      (static_cast<__int128>(mod(a, m)) * static_cast<__int128>(mod(b, m))) % m);
}

inline std::int64_t powmod(std::int64_t base, std::uint64_t e, std::int64_t m) {
  std::int64_t result = 1 % m;
  base = mod(base, m);
  while (e > 0) {
    if (e & 1U)
      result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return result;
}

// Exact power; throws InvalidArgument on int64 overflow.
inline std::int64_t checked_pow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, base, &r))
      throw InvalidArgument("integer overflow computing power");
  return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw InvalidArgument("integer overflow in exponent arithmetic");
  return r;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace engelkit::arith

#include "howe/int_math.hpp"

#include <bit>

namespace howe {

std::uint64_t isqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  // Start above the root: 2^ceil(bits/2) >= sqrt(n).
  const int bits = std::bit_width(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  for (;;) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t p) noexcept {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) noexcept {
  return pow_mod(a, p - 2, p);
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept {
  std::uint64_t r = 1;
  while (exp-- != 0) r *= base;
  return r;
}

}  // namespace howe

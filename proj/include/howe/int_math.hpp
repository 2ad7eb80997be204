#pragma once

#include <cstdint>

namespace howe {

/// Largest supported prime (exclusive). Keeps every product of two residues
/// below 2^40 and p^3 below 2^60, so 64-bit arithmetic never wraps.
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 20;

/// floor(sqrt(n)) by integer Newton iteration. Exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

/// Deterministic trial division.
bool is_prime(std::uint64_t n) noexcept;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t p) noexcept {
  return (a * b) % p;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t p) noexcept;

/// Inverse of a nonzero residue modulo the prime p (Fermat).
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) noexcept;

/// Canonical residue of a signed integer.
inline std::uint64_t reduce_signed(std::int64_t v, std::uint64_t p) noexcept {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

/// Integer power with no modular reduction; caller guarantees no overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp) noexcept;

}  // namespace howe

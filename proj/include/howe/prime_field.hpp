#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "howe/errors.hpp"
#include "howe/int_math.hpp"

namespace howe {

/// An odd prime p < 2^20 together with m = (p - 1) / 2.
class PrimeModulus {
 public:
  /// Throws HoweError(NotPrime) for composite or p < 3 and
  /// HoweError(ModulusTooLarge) for p >= kMaxPrime.
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t half() const noexcept { return m_; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t m_;
};

/// Canonical residue in [0, p).
class FieldElement {
 public:
  FieldElement(const PrimeModulus& modulus, std::int64_t value)
      : modulus_(modulus), value_(reduce_signed(value, modulus.p())) {}

  static FieldElement from_canonical(const PrimeModulus& modulus,
                                     std::uint64_t value) noexcept {
    return FieldElement(modulus, value, Canonical{});
  }

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t p() const noexcept { return modulus_.p(); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator-() const noexcept {
    return from_canonical(modulus_, value_ == 0 ? 0 : p() - value_);
  }

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  /// Throws HoweError(DivisionByZero) when rhs is zero.
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend FieldElement operator+(FieldElement a, std::int64_t b) { return a += FieldElement(a.modulus_, b); }
  friend FieldElement operator-(FieldElement a, std::int64_t b) { return a -= FieldElement(a.modulus_, b); }
  friend FieldElement operator-(std::int64_t a, const FieldElement& b) { return FieldElement(b.modulus_, a) - b; }
  friend FieldElement operator*(FieldElement a, std::int64_t b) { return a *= FieldElement(a.modulus_, b); }

  FieldElement pow(std::uint64_t exp) const noexcept {
    return from_canonical(modulus_, pow_mod(value_, exp, p()));
  }

  /// Throws HoweError(DivisionByZero) for zero.
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend bool operator==(const FieldElement& a, std::int64_t b) noexcept {
    return a.value_ == reduce_signed(b, a.p());
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    return os << x.value_;
  }

 private:
  struct Canonical {};
  FieldElement(const PrimeModulus& modulus, std::uint64_t value, Canonical) noexcept
      : modulus_(modulus), value_(value) {}

  void check_same(const FieldElement& rhs) const;

  PrimeModulus modulus_;
  std::uint64_t value_;
};

/// +1 for nonzero squares, -1 for non-squares, 0 for zero; via Euler's criterion.
int legendre_symbol(const FieldElement& a) noexcept;

/// Raw-residue form of legendre_symbol for hot loops.
int legendre_symbol(std::uint64_t a, const PrimeModulus& modulus) noexcept;

/// Square root r of a nonzero square with r in [1, (p-1)/2] (Tonelli-Shanks).
/// Throws HoweError(NonResidue) when legendre_symbol(a) != +1.
FieldElement sqrt_mod_p(const FieldElement& a);

}  // namespace howe

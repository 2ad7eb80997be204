#include "howe/prime_field.hpp"

#include <string>

namespace howe {

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p), m_((p - 1) / 2) {
  if (p >= kMaxPrime) {
    throw HoweError(ErrorKind::ModulusTooLarge,
                    "prime " + std::to_string(p) + " exceeds the supported cap 2^20");
  }
  if (p < 3 || !is_prime(p)) {
    throw HoweError(ErrorKind::NotPrime,
                    std::to_string(p) + " is not an odd prime");
  }
}

void FieldElement::check_same(const FieldElement& rhs) const {
  if (!(modulus_ == rhs.modulus_)) {
    throw HoweError(ErrorKind::ModulusMismatch,
                    "mixing residues mod " + std::to_string(p()) + " and mod " +
                        std::to_string(rhs.p()));
  }
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(rhs);
  value_ += rhs.value_;
  if (value_ >= p()) value_ -= p();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(rhs);
  value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + p() - rhs.value_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(rhs);
  value_ = mul_mod(value_, rhs.value_, p());
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same(rhs);
  return *this *= rhs.inverse();
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) {
    throw HoweError(ErrorKind::DivisionByZero,
                    "inverse of zero mod " + std::to_string(p()));
  }
  return from_canonical(modulus_, inv_mod(value_, p()));
}

int legendre_symbol(std::uint64_t a, const PrimeModulus& modulus) noexcept {
  a %= modulus.p();
  if (a == 0) return 0;
  return pow_mod(a, modulus.half(), modulus.p()) == 1 ? 1 : -1;
}

int legendre_symbol(const FieldElement& a) noexcept {
  return legendre_symbol(a.value(), a.modulus());
}

FieldElement sqrt_mod_p(const FieldElement& a) {
  const PrimeModulus& mod = a.modulus();
  if (legendre_symbol(a) != 1) {
    throw HoweError(ErrorKind::NonResidue,
                    std::to_string(a.value()) + " is not a nonzero square mod " +
                        std::to_string(mod.p()));
  }
  const std::uint64_t p = mod.p();
  std::uint64_t r;
  if (p % 4 == 3) {
    r = pow_mod(a.value(), (p + 1) / 4, p);
  } else {
    // p - 1 = q * 2^s with q odd
    std::uint64_t q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    std::uint64_t z = 2;
    while (legendre_symbol(z, mod) != -1) ++z;

    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a.value(), q, p);
    r = pow_mod(a.value(), (q + 1) / 2, p);
    unsigned m = s;
    while (t != 1) {
      unsigned i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      std::uint64_t b = c;
      for (unsigned j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
      r = mul_mod(r, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
  }
  if (r > p - r) r = p - r;
  return FieldElement::from_canonical(mod, r);
}

}  // namespace howe

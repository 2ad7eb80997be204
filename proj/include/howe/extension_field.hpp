#pragma once

#include <array>
#include <cstdint>
#include <ostream>

#include "howe/prime_field.hpp"

namespace howe {

/// Polynomial-basis coordinates c0 + c1*x + c2*x^2; unused slots stay zero.
using ExtCoeffs = std::array<std::uint64_t, 3>;

/// F_{p^k} = F_p[x] / (f) for a monic irreducible f of degree k in {1, 2, 3}.
/// Degree 1 is the prime field itself and exists so counting code can treat
/// every field uniformly.
class ExtensionField {
 public:
  /// `low_coeffs` holds f_0..f_{k-1}; f is monic. Throws
  /// HoweError(InvalidArgument) for unsupported k and HoweError(Degenerate)
  /// when f has a root in F_p (so is reducible; for k <= 3 that is the only way).
  ExtensionField(const PrimeModulus& modulus, int k, const ExtCoeffs& low_coeffs);

  static ExtensionField prime_field(const PrimeModulus& modulus);

  const PrimeModulus& modulus() const noexcept { return modulus_; }
  std::uint64_t p() const noexcept { return modulus_.p(); }
  int degree() const noexcept { return k_; }
  /// Low coefficients f_0..f_{k-1} of the defining polynomial.
  const ExtCoeffs& poly() const noexcept { return poly_; }
  /// Field size p^k.
  std::uint64_t size() const noexcept { return size_; }

  ExtCoeffs add(const ExtCoeffs& a, const ExtCoeffs& b) const noexcept;
  ExtCoeffs sub(const ExtCoeffs& a, const ExtCoeffs& b) const noexcept;
  ExtCoeffs mul(const ExtCoeffs& a, const ExtCoeffs& b) const noexcept;
  ExtCoeffs scale(const ExtCoeffs& a, std::uint64_t s) const noexcept;
  ExtCoeffs pow(ExtCoeffs base, std::uint64_t exp) const noexcept;

  /// Bijection onto [0, p^k): c0 + c1 p + c2 p^2.
  std::uint64_t index(const ExtCoeffs& a) const noexcept {
    return a[0] + p() * (a[1] + p() * a[2]);
  }
  ExtCoeffs from_index(std::uint64_t idx) const noexcept;

  friend bool operator==(const ExtensionField&, const ExtensionField&) = default;

 private:
  PrimeModulus modulus_;
  int k_;
  ExtCoeffs poly_;
  std::uint64_t size_;
};

/// Monic irreducible polynomial of degree k in {2, 3}, the first one met when
/// walking coefficient tuples (f_{k-1}, ..., f_0) in ascending lexicographic
/// order. Reproducible for fixed (p, k).
ExtensionField build_extension(const PrimeModulus& modulus, int k);

class ExtFieldElement {
 public:
  ExtFieldElement(const ExtensionField& field, const ExtCoeffs& coeffs);
  ExtFieldElement(const ExtensionField& field, std::int64_t base_value);

  const ExtensionField& field() const noexcept { return field_; }
  const ExtCoeffs& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_ == ExtCoeffs{}; }

  ExtFieldElement& operator+=(const ExtFieldElement& rhs);
  ExtFieldElement& operator-=(const ExtFieldElement& rhs);
  ExtFieldElement& operator*=(const ExtFieldElement& rhs);
  ExtFieldElement& operator/=(const ExtFieldElement& rhs);

  friend ExtFieldElement operator+(ExtFieldElement a, const ExtFieldElement& b) { return a += b; }
  friend ExtFieldElement operator-(ExtFieldElement a, const ExtFieldElement& b) { return a -= b; }
  friend ExtFieldElement operator*(ExtFieldElement a, const ExtFieldElement& b) { return a *= b; }
  friend ExtFieldElement operator/(ExtFieldElement a, const ExtFieldElement& b) { return a /= b; }

  ExtFieldElement pow(std::uint64_t exp) const;
  /// Throws HoweError(DivisionByZero) for zero.
  ExtFieldElement inverse() const;

  friend bool operator==(const ExtFieldElement& a, const ExtFieldElement& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtFieldElement& x);

 private:
  void check_same(const ExtFieldElement& rhs) const;

  ExtensionField field_;
  ExtCoeffs coeffs_;
};

/// True iff a = 0 or a^((p^k - 1) / 2) = 1.
bool ext_is_square(const ExtFieldElement& a);

}  // namespace howe

#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <vector>

#include "howe/prime_field.hpp"

namespace howe {

/// Twisted Legendre curve s^2 = theta * t (t - 1) (t - lambda) over F_p.
class LegendreCurve {
 public:
  /// Throws HoweError(Degenerate) when theta = 0 or lambda is 0 or 1.
  LegendreCurve(const FieldElement& theta, const FieldElement& lambda);
  LegendreCurve(const PrimeModulus& modulus, std::int64_t theta, std::int64_t lambda)
      : LegendreCurve(FieldElement(modulus, theta), FieldElement(modulus, lambda)) {}

  const PrimeModulus& modulus() const noexcept { return theta_.modulus(); }
  std::uint64_t p() const noexcept { return theta_.p(); }
  const FieldElement& theta() const noexcept { return theta_; }
  const FieldElement& lambda() const noexcept { return lambda_; }

  friend bool operator==(const LegendreCurve&, const LegendreCurve&) = default;
  friend std::ostream& operator<<(std::ostream& os, const LegendreCurve& e) {
    return os << '(' << e.theta_ << ", " << e.lambda_ << ')';
  }

 private:
  FieldElement theta_;
  FieldElement lambda_;
};

/// Frobenius traces a_1..a_3 of a genus-one curve, from its count over F_p.
struct TraceSequence {
  std::uint64_t p;
  std::int64_t n1;
  std::array<std::int64_t, 3> a;

  /// Throws HoweError(HasseViolation) when |p + 1 - n1| > floor(2 sqrt p).
  static TraceSequence from_count(std::uint64_t p, std::int64_t n1);

  /// #E(F_{p^j}) = p^j + 1 - a_j for j in {1, 2, 3}.
  std::int64_t count_over(int j) const;
};

/// H_p(t) = sum_{i=0}^{m} C(m, i)^2 t^i at t = lam, with m = (p - 1) / 2.
FieldElement hasse_poly_eval(const PrimeModulus& modulus, const FieldElement& lam);

/// H_p with its coefficients C(m, i)^2 mod p precomputed; Horner evaluation.
class HassePolynomial {
 public:
  explicit HassePolynomial(const PrimeModulus& modulus);

  std::uint64_t eval(std::uint64_t lam) const noexcept;
  FieldElement operator()(const FieldElement& lam) const;

 private:
  PrimeModulus modulus_;
  std::vector<std::uint64_t> coeffs_;
};

/// floor(2 sqrt(q)) computed as isqrt(4q).
std::uint64_t floor_two_sqrt(std::uint64_t q);

/// q + 1 + g floor(2 sqrt(q)).
std::uint64_t serre_bound(std::uint64_t q, std::uint64_t g);

/// (-theta)^m H_p(lambda): the trace of Frobenius reduced mod p.
FieldElement trace_mod_p(const LegendreCurve& e);

/// Same quantity with H_p(lambda) supplied by the caller.
FieldElement trace_from_hasse(const FieldElement& theta, const FieldElement& hasse_value);

/// Whether E attains q + 1 + floor(2 sqrt q) over F_p. Requires p >= 17
/// (HoweError(HypothesisViolated) otherwise).
bool attains_serre_fp(const LegendreCurve& e);

/// Whether E is maximal over F_{p^2}; independent of theta.
bool maximal_fp2(const LegendreCurve& e);

/// Whether E attains the Serre bound over F_{p^3}. Requires p >= 11.
bool attains_serre_fp3(const LegendreCurve& e);

/// The F_{p^3} criterion on a representative h in [0, p).
bool serre_fp3_holds(std::uint64_t h, std::uint64_t p);

/// n_j from n_1 via a_1 = p + 1 - n_1, a_2 = a_1^2 - 2p, a_3 = a_1 a_2 - p a_1.
/// Throws HoweError(HasseViolation) when n1 breaks the Hasse bound.
std::int64_t zeta_lift(std::int64_t n1, std::uint64_t p, int j);

/// #E(F_{p^j}) == 0 (mod 4), counted directly when p^j is within the
/// counting cap and by zeta lift otherwise.
bool mod4_check(const LegendreCurve& e, int j);

}  // namespace howe

#include "howe/hasse.hpp"

#include <string>

#include "howe/curve_models.hpp"

namespace howe {

LegendreCurve::LegendreCurve(const FieldElement& theta, const FieldElement& lambda)
    : theta_(theta), lambda_(lambda) {
  if (!(theta.modulus() == lambda.modulus())) {
    throw HoweError(ErrorKind::ModulusMismatch, "theta and lambda live in different fields");
  }
  if (theta.is_zero()) {
    throw HoweError(ErrorKind::Degenerate, "Legendre twist theta must be nonzero");
  }
  if (lambda.is_zero() || lambda == 1) {
    throw HoweError(ErrorKind::Degenerate,
                    "Legendre parameter lambda must avoid {0, 1}, got " +
                        std::to_string(lambda.value()));
  }
}

TraceSequence TraceSequence::from_count(std::uint64_t p, std::int64_t n1) {
  const auto sp = static_cast<std::int64_t>(p);
  const std::int64_t a1 = sp + 1 - n1;
  if (static_cast<std::uint64_t>(a1 < 0 ? -a1 : a1) > floor_two_sqrt(p)) {
    throw HoweError(ErrorKind::HasseViolation,
                    "count " + std::to_string(n1) + " over F_" + std::to_string(p) +
                        " violates the Hasse bound");
  }
  const std::int64_t a2 = a1 * a1 - 2 * sp;
  const std::int64_t a3 = a1 * a2 - sp * a1;
  return {p, n1, {a1, a2, a3}};
}

std::int64_t TraceSequence::count_over(int j) const {
  if (j < 1 || j > 3) {
    throw HoweError(ErrorKind::InvalidArgument,
                    "field degree " + std::to_string(j) + " not in {1, 2, 3}");
  }
  return static_cast<std::int64_t>(ipow(p, static_cast<unsigned>(j))) + 1 - a[j - 1];
}

FieldElement hasse_poly_eval(const PrimeModulus& modulus, const FieldElement& lam) {
  const std::uint64_t p = modulus.p();
  const std::uint64_t m = modulus.half();
  const std::uint64_t t = lam.value();
  // C(m, i) = C(m, i - 1) (m - i + 1) / i; every i <= m < p is invertible.
  std::uint64_t binom = 1;
  std::uint64_t power = 1;
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (i > 0) {
      binom = mul_mod(mul_mod(binom, m - i + 1, p), inv_mod(i, p), p);
      power = mul_mod(power, t, p);
    }
    sum = (sum + mul_mod(mul_mod(binom, binom, p), power, p)) % p;
  }
  return FieldElement::from_canonical(modulus, sum);
}

HassePolynomial::HassePolynomial(const PrimeModulus& modulus)
    : modulus_(modulus), coeffs_(modulus.half() + 1) {
  const std::uint64_t p = modulus.p();
  const std::uint64_t m = modulus.half();
  std::uint64_t binom = 1;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (i > 0) binom = mul_mod(mul_mod(binom, m - i + 1, p), inv_mod(i, p), p);
    coeffs_[i] = mul_mod(binom, binom, p);
  }
}

std::uint64_t HassePolynomial::eval(std::uint64_t lam) const noexcept {
  const std::uint64_t p = modulus_.p();
  lam %= p;
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = (mul_mod(acc, lam, p) + *it) % p;
  }
  return acc;
}

FieldElement HassePolynomial::operator()(const FieldElement& lam) const {
  if (!(lam.modulus() == modulus_)) {
    throw HoweError(ErrorKind::ModulusMismatch, "Hasse polynomial evaluated off its field");
  }
  return FieldElement::from_canonical(modulus_, eval(lam.value()));
}

std::uint64_t floor_two_sqrt(std::uint64_t q) {
  if (q == 0 || q > (std::uint64_t{1} << 61)) {
    throw HoweError(ErrorKind::InvalidArgument,
                    "floor_two_sqrt expects 1 <= q <= 2^61, got " + std::to_string(q));
  }
  return isqrt(4 * q);
}

std::uint64_t serre_bound(std::uint64_t q, std::uint64_t g) {
  return q + 1 + g * floor_two_sqrt(q);
}

FieldElement trace_from_hasse(const FieldElement& theta, const FieldElement& hasse_value) {
  return (-theta).pow(theta.modulus().half()) * hasse_value;
}

FieldElement trace_mod_p(const LegendreCurve& e) {
  return trace_from_hasse(e.theta(), hasse_poly_eval(e.modulus(), e.lambda()));
}

namespace {

void require_prime_at_least(const LegendreCurve& e, std::uint64_t bound) {
  if (e.p() < bound) {
    throw HoweError(ErrorKind::HypothesisViolated,
                    "criterion requires p >= " + std::to_string(bound) + ", got p = " +
                        std::to_string(e.p()));
  }
}

}  // namespace

bool attains_serre_fp(const LegendreCurve& e) {
  require_prime_at_least(e, 17);
  const FieldElement target(e.modulus(), -static_cast<std::int64_t>(floor_two_sqrt(e.p())));
  return trace_mod_p(e) == target;
}

bool maximal_fp2(const LegendreCurve& e) {
  return hasse_poly_eval(e.modulus(), e.lambda()).is_zero();
}

bool serre_fp3_holds(std::uint64_t h, std::uint64_t p) {
  const auto sh = static_cast<std::int64_t>(h);
  const auto sp = static_cast<std::int64_t>(p);
  const auto bound = static_cast<std::int64_t>(floor_two_sqrt(p * p * p));
  return sh * sh * sh - 3 * sp * sh == -bound;
}

bool attains_serre_fp3(const LegendreCurve& e) {
  require_prime_at_least(e, 11);
  return serre_fp3_holds(trace_mod_p(e).value(), e.p());
}

std::int64_t zeta_lift(std::int64_t n1, std::uint64_t p, int j) {
  return TraceSequence::from_count(p, n1).count_over(j);
}

bool mod4_check(const LegendreCurve& e, int j) {
  const PointCount c = count_points_or_lift(e, j);
  return c.count % 4 == 0;
}

}  // namespace howe

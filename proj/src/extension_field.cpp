#include "howe/extension_field.hpp"

#include <string>

namespace howe {

namespace {

// Evaluates the monic polynomial x^k + f_{k-1} x^{k-1} + ... + f_0 at x.
std::uint64_t eval_monic(const ExtCoeffs& low, int k, std::uint64_t x,
                         std::uint64_t p) {
  std::uint64_t acc = 1;
  for (int i = k - 1; i >= 0; --i) acc = (mul_mod(acc, x, p) + low[i]) % p;
  return acc;
}

bool has_root(const ExtCoeffs& low, int k, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    if (eval_monic(low, k, x, p) == 0) return true;
  }
  return false;
}

}  // namespace

ExtensionField::ExtensionField(const PrimeModulus& modulus, int k,
                               const ExtCoeffs& low_coeffs)
    : modulus_(modulus), k_(k), poly_{}, size_(1) {
  if (k < 1 || k > 3) {
    throw HoweError(ErrorKind::InvalidArgument,
                    "extension degree " + std::to_string(k) + " not in {1, 2, 3}");
  }
  for (int i = 0; i < k; ++i) poly_[i] = low_coeffs[i] % p();
  if (k > 1 && has_root(poly_, k, p())) {
    throw HoweError(ErrorKind::Degenerate,
                    "defining polynomial has a root mod " + std::to_string(p()));
  }
  size_ = ipow(p(), static_cast<unsigned>(k));
}

ExtensionField ExtensionField::prime_field(const PrimeModulus& modulus) {
  return ExtensionField(modulus, 1, ExtCoeffs{});
}

ExtCoeffs ExtensionField::add(const ExtCoeffs& a, const ExtCoeffs& b) const noexcept {
  ExtCoeffs r{};
  for (int i = 0; i < k_; ++i) {
    r[i] = a[i] + b[i];
    if (r[i] >= p()) r[i] -= p();
  }
  return r;
}

ExtCoeffs ExtensionField::sub(const ExtCoeffs& a, const ExtCoeffs& b) const noexcept {
  ExtCoeffs r{};
  for (int i = 0; i < k_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p() - b[i];
  return r;
}

ExtCoeffs ExtensionField::scale(const ExtCoeffs& a, std::uint64_t s) const noexcept {
  ExtCoeffs r{};
  for (int i = 0; i < k_; ++i) r[i] = mul_mod(a[i], s, p());
  return r;
}

ExtCoeffs ExtensionField::mul(const ExtCoeffs& a, const ExtCoeffs& b) const noexcept {
  const std::uint64_t q = p();
  if (k_ == 1) return {mul_mod(a[0], b[0], q), 0, 0};

  // Schoolbook product; every partial sum stays below 3 * 2^40.
  std::array<std::uint64_t, 5> t{};
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < k_; ++j) t[i + j] += a[i] * b[j];
  }
  for (auto& v : t) v %= q;

  // x^k = -(f_{k-1} x^{k-1} + ... + f_0)
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const std::uint64_t lead = t[d];
    if (lead == 0) continue;
    t[d] = 0;
    for (int i = 0; i < k_; ++i) {
      t[d - k_ + i] = (t[d - k_ + i] + q - mul_mod(lead, poly_[i], q)) % q;
    }
  }
  return {t[0], t[1], k_ == 3 ? t[2] : 0};
}

ExtCoeffs ExtensionField::pow(ExtCoeffs base, std::uint64_t exp) const noexcept {
  ExtCoeffs result{1 % p(), 0, 0};
  while (exp != 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

ExtCoeffs ExtensionField::from_index(std::uint64_t idx) const noexcept {
  ExtCoeffs r{};
  for (int i = 0; i < k_; ++i) {
    r[i] = idx % p();
    idx /= p();
  }
  return r;
}

ExtensionField build_extension(const PrimeModulus& modulus, int k) {
  if (k != 2 && k != 3) {
    throw HoweError(ErrorKind::InvalidArgument,
                    "build_extension supports k in {2, 3}, got " + std::to_string(k));
  }
  const std::uint64_t p = modulus.p();
  // Tuples (f_{k-1}, ..., f_0) ascending: highest coefficient varies slowest.
  const std::uint64_t total = ipow(p, static_cast<unsigned>(k));
  for (std::uint64_t code = 0; code < total; ++code) {
    ExtCoeffs low{};
    std::uint64_t rest = code;
    for (int i = 0; i < k; ++i) {
      low[i] = rest % p;
      rest /= p;
    }
    if (!has_root(low, k, p)) return ExtensionField(modulus, k, low);
  }
  // Unreachable: irreducible polynomials of every degree exist.
  throw HoweError(ErrorKind::Degenerate, "no irreducible polynomial found");
}

ExtFieldElement::ExtFieldElement(const ExtensionField& field, const ExtCoeffs& coeffs)
    : field_(field), coeffs_{} {
  for (int i = 0; i < field_.degree(); ++i) coeffs_[i] = coeffs[i] % field_.p();
}

ExtFieldElement::ExtFieldElement(const ExtensionField& field, std::int64_t base_value)
    : field_(field), coeffs_{reduce_signed(base_value, field.p()), 0, 0} {}

void ExtFieldElement::check_same(const ExtFieldElement& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw HoweError(ErrorKind::ModulusMismatch, "mixing elements of different fields");
  }
}

ExtFieldElement& ExtFieldElement::operator+=(const ExtFieldElement& rhs) {
  check_same(rhs);
  coeffs_ = field_.add(coeffs_, rhs.coeffs_);
  return *this;
}

ExtFieldElement& ExtFieldElement::operator-=(const ExtFieldElement& rhs) {
  check_same(rhs);
  coeffs_ = field_.sub(coeffs_, rhs.coeffs_);
  return *this;
}

ExtFieldElement& ExtFieldElement::operator*=(const ExtFieldElement& rhs) {
  check_same(rhs);
  coeffs_ = field_.mul(coeffs_, rhs.coeffs_);
  return *this;
}

ExtFieldElement& ExtFieldElement::operator/=(const ExtFieldElement& rhs) {
  check_same(rhs);
  return *this *= rhs.inverse();
}

ExtFieldElement ExtFieldElement::pow(std::uint64_t exp) const {
  return ExtFieldElement(field_, field_.pow(coeffs_, exp));
}

ExtFieldElement ExtFieldElement::inverse() const {
  if (is_zero()) throw HoweError(ErrorKind::DivisionByZero, "inverse of zero");
  return pow(field_.size() - 2);
}

std::ostream& operator<<(std::ostream& os, const ExtFieldElement& x) {
  os << '[';
  for (int i = 0; i < x.field_.degree(); ++i) os << (i ? "," : "") << x.coeffs_[i];
  return os << ']';
}

bool ext_is_square(const ExtFieldElement& a) {
  if (a.is_zero()) return true;
  const ExtensionField& f = a.field();
  return f.pow(a.coeffs(), (f.size() - 1) / 2) == ExtCoeffs{1, 0, 0};
}

}  // namespace howe

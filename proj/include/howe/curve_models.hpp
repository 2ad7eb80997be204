#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "howe/extension_field.hpp"
#include "howe/hasse.hpp"

namespace howe {

/// Direct counting is refused above this many field elements.
inline constexpr std::uint64_t kCountingCap = 10'000'000;

/// y^2 = alpha * prod (x - r_i) with alpha in F_p^* and distinct r_i in F_p.
class HyperellipticModel {
 public:
  /// Throws HoweError(Degenerate) for alpha = 0, repeated roots, or a root
  /// count outside {3, 4, 5, 6}.
  HyperellipticModel(const FieldElement& alpha, std::vector<FieldElement> roots);

  static HyperellipticModel from_legendre(const LegendreCurve& e);

  const PrimeModulus& modulus() const noexcept { return alpha_.modulus(); }
  std::uint64_t p() const noexcept { return alpha_.p(); }
  const FieldElement& alpha() const noexcept { return alpha_; }
  const std::vector<FieldElement>& roots() const noexcept { return roots_; }
  int degree() const noexcept { return static_cast<int>(roots_.size()); }
  int genus() const noexcept { return (degree() - 1) / 2; }

 private:
  FieldElement alpha_;
  std::vector<FieldElement> roots_;
};

enum class CountMethod { BruteForce, ZetaLift, Decomposition };

std::string_view to_string(CountMethod method) noexcept;

/// Number of points over F_q, q = p^j.
struct PointCount {
  std::uint64_t q;
  std::int64_t count;
  CountMethod method;

  friend bool operator==(const PointCount&, const PointCount&) = default;
};

/// Quadratic character of F_{p^k} tabulated by element index. Tables are
/// cached per (p, k) and shared; the returned object is immutable.
class CharacterTable {
 public:
  CharacterTable(const PrimeModulus& modulus, int k);

  const ExtensionField& field() const noexcept { return field_; }
  /// 0 for zero, +1 for nonzero squares, -1 otherwise.
  int chi(std::uint64_t index) const noexcept { return table_[index]; }
  int chi(const ExtCoeffs& a) const noexcept { return table_[field_.index(a)]; }

 private:
  ExtensionField field_;
  std::vector<std::int8_t> table_;
};

/// Returns the shared table for F_{p^k}, building it on first use.
/// Throws HoweError(CapExceeded) when p^k > kCountingCap.
std::shared_ptr<const CharacterTable> character_table(const PrimeModulus& modulus, int k);

/// Points on the nonsingular projective model over F_{p^j}: affine points
/// plus 1 point at infinity for odd degree, or 1 + chi(alpha) for even degree.
/// Throws HoweError(CapExceeded) when p^j > kCountingCap.
PointCount count_points(const HyperellipticModel& h, int j);
PointCount count_points(const LegendreCurve& e, int j);

/// p^j + 1 - #H(F_{p^j}).
std::int64_t curve_trace(const HyperellipticModel& h, int j);

/// Direct count within the cap, otherwise the zeta lift of the F_p count.
PointCount count_points_or_lift(const LegendreCurve& e, int j);

}  // namespace howe

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "howe/curve_models.hpp"
#include "howe/hasse.hpp"

namespace howe {

/// Parameter tuple (p, alpha1, alpha2, a1..a6, b5, b6) of the genus-5 fibre
/// product of
///   C1: y1^2 = alpha1 (x - a1)(x - a2)(x - a3)(x - a4)(x - a5)(x - a6)
///   C2: y2^2 = alpha2 (x - a1)(x - a2)(x - a3)(x - a4)(x - b5)(x - b6)
/// over the projective line.
struct HoweParams {
  PrimeModulus modulus;
  FieldElement alpha1;
  FieldElement alpha2;
  std::array<FieldElement, 6> a;
  std::array<FieldElement, 2> b;

  using Row = std::array<std::int64_t, 11>;

  /// Row layout p, alpha1, alpha2, a1..a6, b5, b6; entries reduced mod p.
  static HoweParams from_row(const Row& row);
  Row to_row() const;

  std::uint64_t p() const noexcept { return modulus.p(); }

  HyperellipticModel c1() const;
  HyperellipticModel c2() const;
  /// C3: y3^2 = alpha1 alpha2 (x - a5)(x - a6)(x - b5)(x - b6).
  HyperellipticModel c3() const;

  friend bool operator==(const HoweParams&, const HoweParams&) = default;
};

/// Cross-ratio conditions in the six-root slot order used by the splitting
/// (slots 1..6 hold a1..a6 of C1, or a1..a4, b5, b6 of C2).
bool cross_ratio_condition(const std::array<FieldElement, 6>& roots);

struct ValidationIssue {
  ErrorKind kind;
  std::string message;
};

/// Legendre symbols of the squareness products. The two b5 variants of the
/// product condition are reported only; the decomposition itself consumes
/// a(a - b) and a(a - c).
struct SquarenessReport {
  int product_a4_b5 = 0;  // (a1-a2)(a2-a4)(a4-b5)(b5-a1)
  int product_a5_b5 = 0;  // (a1-a2)(a2-a5)(a5-b5)(b5-a1)
  int product_a4_a5 = 0;  // (a1-a2)(a2-a4)(a4-a5)(a5-a1)
  int a_ab = 0;           // a(a - b)
  int a_ac = 0;           // a(a - c)

  bool b5_variants_disagree() const noexcept {
    return product_a4_b5 != product_a5_b5;
  }
};

struct Validation {
  std::vector<ValidationIssue> issues;
  SquarenessReport squareness;

  bool ok() const noexcept { return issues.empty(); }
};

/// Collects every violated hypothesis. A clean result certifies distinct
/// roots, nonzero alphas, both cross-ratio equalities, a(a - b) and a(a - c)
/// nonzero squares, every lambda_i outside {0, 1} and every theta_i nonzero.
Validation validate(const HoweParams& params);

/// Throws HoweError carrying the first issue's kind and all messages.
void require_valid(const HoweParams& params);

/// 2 (g1 + g2) + 1 - r. Throws HoweError(InvalidArgument) unless
/// 0 < g1 <= g2 and 0 <= r <= 2 g1 + 2.
int genus_of_howe(int g1, int g2, int r);

/// r == g1 + g2 + 1. Throws HoweError(HypothesisViolated) when the genus is
/// below 4.
bool is_hyperelliptic_howe(int g1, int g2, int r);

enum class Branch { Canonical, Swapped };

/// Splitting of a genus-2 curve y^2 = alpha prod_{i=1}^{6} (x - a_i) whose
/// roots satisfy the cross-ratio condition.
struct Genus2Split {
  FieldElement lambda;
  FieldElement mu;
  FieldElement theta;
  LegendreCurve plus;
  LegendreCurve minus;
};

/// Throws HoweError with kind ConditionFailed (cross ratio), NonResidue
/// (lambda (lambda - mu) not a nonzero square), DivisionByZero (lambda or mu
/// equal to 1), Degenerate (a factor with lambda in {0, 1}).
Genus2Split split_genus2(const HyperellipticModel& d, Branch branch = Branch::Canonical);

struct SplitData {
  FieldElement a;
  FieldElement b;
  FieldElement c;
  FieldElement beta1;
  FieldElement beta2;
  std::array<FieldElement, 5> theta;
  std::array<FieldElement, 5> lambda;
};

struct Decomposition {
  SplitData split;
  std::array<LegendreCurve, 5> factors;
};

/// E1, E2 from C1, E3, E4 from C2, E5 from C3. Validates first.
Decomposition decompose_genus5(const HoweParams& params, Branch branch = Branch::Canonical);

/// #C(F_q) by both routes, with the per-curve counts behind them.
struct HoweCount {
  PointCount total;
  std::optional<std::array<PointCount, 3>> quotients;  // C1, C2, C3
  std::array<PointCount, 5> factors;                   // E1..E5
};

/// Direct oracle counts over F_{p^j}: #C1 + #C2 + #C3 - 2q - 2 and
/// sum #E_i - 4q - 4 must agree (HoweError(DecompositionMismatch) otherwise).
HoweCount howe_point_count(const HoweParams& params, int j);

/// sum zeta_lift(#E_i(F_p), p, j) - 4 p^j - 4; no direct counting above F_p.
HoweCount howe_point_count_lifted(const HoweParams& params, int j);

/// Per-factor residues and the genus-5 verdicts. A verdict is true iff its
/// predicate holds for all five factors; an empty optional means the prime
/// is below the criterion's threshold.
struct SerreVerdicts {
  std::array<std::uint64_t, 5> hasse_values{};  // H_p(lambda_i)
  std::array<std::uint64_t, 5> traces{};        // h_i in [0, p)
  std::optional<bool> serre_fp;
  bool maximal_fp2 = false;
  std::optional<bool> serre_fp3;
  /// #C(F_{p^j}) == 0 (mod 4) for j = 1, 2, 3 (F_p oracle, zeta lift above).
  std::array<bool, 3> count_mod4{};
  std::array<std::int64_t, 3> lifted_counts{};

  bool mod4_holds() const noexcept {
    return count_mod4[0] && count_mod4[1] && count_mod4[2];
  }
};

SerreVerdicts serre_verdicts(const HoweParams& params, const Decomposition& decomposition);
SerreVerdicts serre_verdicts(const HoweParams& params);

struct DecompositionReport {
  HoweParams params;
  Decomposition decomposition;
  std::vector<HoweCount> counts;  // one per requested field degree
  SerreVerdicts verdicts;
  SquarenessReport squareness;
};

/// Counts over each F_{p^j}, j in `degrees`: direct when p^j is within the
/// counting cap, zeta-lifted otherwise.
DecompositionReport make_report(const HoweParams& params, const std::vector<int>& degrees);

}  // namespace howe

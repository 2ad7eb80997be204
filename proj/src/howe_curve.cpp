#include "howe/howe_curve.hpp"

#include <sstream>
#include <utility>

namespace howe {

namespace {

FieldElement fe(const PrimeModulus& mod, std::int64_t v) { return FieldElement(mod, v); }

// (x1 - x3)(x2 - x4) / ((x2 - x3)(x1 - x4)); callers guarantee distinct points.
FieldElement cross_ratio(const FieldElement& x1, const FieldElement& x2,
                         const FieldElement& x3, const FieldElement& x4) {
  return (x1 - x3) * (x2 - x4) / ((x2 - x3) * (x1 - x4));
}

}  // namespace

HoweParams HoweParams::from_row(const Row& row) {
  if (row[0] < 0) throw HoweError(ErrorKind::NotPrime, "negative prime");
  const PrimeModulus mod(static_cast<std::uint64_t>(row[0]));
  return HoweParams{
      mod,
      fe(mod, row[1]),
      fe(mod, row[2]),
      {fe(mod, row[3]), fe(mod, row[4]), fe(mod, row[5]), fe(mod, row[6]), fe(mod, row[7]),
       fe(mod, row[8])},
      {fe(mod, row[9]), fe(mod, row[10])},
  };
}

HoweParams::Row HoweParams::to_row() const {
  Row row{};
  row[0] = static_cast<std::int64_t>(p());
  row[1] = static_cast<std::int64_t>(alpha1.value());
  row[2] = static_cast<std::int64_t>(alpha2.value());
  for (int i = 0; i < 6; ++i) row[3 + i] = static_cast<std::int64_t>(a[i].value());
  row[9] = static_cast<std::int64_t>(b[0].value());
  row[10] = static_cast<std::int64_t>(b[1].value());
  return row;
}

HyperellipticModel HoweParams::c1() const {
  return HyperellipticModel(alpha1, {a[0], a[1], a[2], a[3], a[4], a[5]});
}

HyperellipticModel HoweParams::c2() const {
  return HyperellipticModel(alpha2, {a[0], a[1], a[2], a[3], b[0], b[1]});
}

HyperellipticModel HoweParams::c3() const {
  return HyperellipticModel(alpha1 * alpha2, {a[4], a[5], b[0], b[1]});
}

bool cross_ratio_condition(const std::array<FieldElement, 6>& r) {
  // (a2 - a4)(a1 - a6)(a3 - a5) = (a2 - a6)(a1 - a5)(a3 - a4)
  return (r[1] - r[3]) * (r[0] - r[5]) * (r[2] - r[4]) ==
         (r[1] - r[5]) * (r[0] - r[4]) * (r[2] - r[3]);
}

namespace {

std::array<FieldElement, 6> root_array(const std::vector<FieldElement>& v) {
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

std::string describe(const HyperellipticModel& d) {
  std::ostringstream os;
  os << d.alpha();
  for (const auto& r : d.roots()) os << "(x-" << r << ")";
  return os.str();
}

}  // namespace

Genus2Split split_genus2(const HyperellipticModel& d, Branch branch) {
  if (d.degree() != 6) {
    throw HoweError(ErrorKind::InvalidArgument, "genus-2 splitting needs a sextic model");
  }
  const auto r = root_array(d.roots());
  if (!cross_ratio_condition(r)) {
    throw HoweError(ErrorKind::ConditionFailed,
                    "cross-ratio condition fails for " + describe(d));
  }
  const FieldElement lambda = cross_ratio(r[0], r[1], r[2], r[3]);
  const FieldElement mu = cross_ratio(r[0], r[1], r[2], r[4]);
  const FieldElement theta = d.alpha() * (r[1] - r[2]) * (r[0] - r[3]) * (r[0] - r[4]) * (r[0] - r[5]);
  if (lambda == 1 || mu == 1) {
    throw HoweError(ErrorKind::DivisionByZero, "cross ratio equal to 1 in " + describe(d));
  }
  const FieldElement disc = lambda * lambda - lambda * mu;
  if (legendre_symbol(disc) != 1) {
    throw HoweError(ErrorKind::NonResidue,
                    "lambda(lambda - mu) = " + std::to_string(disc.value()) +
                        " is not a nonzero square for " + describe(d));
  }
  FieldElement root = sqrt_mod_p(disc);
  if (branch == Branch::Swapped) root = -root;

  const FieldElement one = fe(d.modulus(), 1);
  const FieldElement twist = theta * (one - mu) / (one - lambda);
  const FieldElement scale = (one - lambda) / (mu - one);
  const FieldElement base = mu - lambda * 2;
  const FieldElement lam_plus = scale * (base + root * 2);
  const FieldElement lam_minus = scale * (base - root * 2);
  return Genus2Split{lambda, mu, theta, LegendreCurve(twist, lam_plus),
                     LegendreCurve(twist, lam_minus)};
}

int genus_of_howe(int g1, int g2, int r) {
  if (!(0 < g1 && g1 <= g2 && 0 <= r && r <= 2 * g1 + 2)) {
    throw HoweError(ErrorKind::InvalidArgument,
                    "need 0 < g1 <= g2 and 0 <= r <= 2 g1 + 2");
  }
  return 2 * (g1 + g2) + 1 - r;
}

bool is_hyperelliptic_howe(int g1, int g2, int r) {
  const int g = genus_of_howe(g1, g2, r);
  if (g < 4) {
    throw HoweError(ErrorKind::HypothesisViolated,
                    "hyperellipticity criterion needs genus >= 4, got " + std::to_string(g));
  }
  return r == g1 + g2 + 1;
}

namespace {

// All quantities of the decomposition, assuming distinct roots. Throws
// HoweError(NonResidue) when a(a - b) or a(a - c) is not a nonzero square.
SplitData compute_split(const HoweParams& prm, Branch branch) {
  const auto& a = prm.a;
  const auto& b = prm.b;
  const PrimeModulus& mod = prm.modulus;
  const FieldElement one = fe(mod, 1);

  const FieldElement ca = cross_ratio(a[0], a[1], a[2], a[3]);
  const FieldElement cb = cross_ratio(a[0], a[1], a[2], a[4]);
  const FieldElement cc = cross_ratio(a[0], a[1], a[2], b[0]);
  const FieldElement beta1 = prm.alpha1 * (a[1] - a[2]) * (a[0] - a[3]) * (a[0] - a[4]) * (a[0] - a[5]);
  const FieldElement beta2 = prm.alpha2 * (a[1] - a[2]) * (a[0] - a[3]) * (a[0] - b[0]) * (a[0] - b[1]);

  auto pair_lambdas = [&](const FieldElement& other) {
    const FieldElement disc = ca * ca - ca * other;
    if (legendre_symbol(disc) != 1) {
      throw HoweError(ErrorKind::NonResidue,
                      "a(a - x) = " + std::to_string(disc.value()) + " is not a nonzero square");
    }
    FieldElement root = sqrt_mod_p(disc);
    if (branch == Branch::Swapped) root = -root;
    const FieldElement scale = (one - ca) / (other - one);
    const FieldElement base = other - ca * 2;
    return std::make_pair(scale * (base + root * 2), scale * (base - root * 2));
  };

  const auto [l1, l2] = pair_lambdas(cb);
  const auto [l3, l4] = pair_lambdas(cc);
  const FieldElement t12 = beta1 * (one - cb) / (one - ca);
  const FieldElement t34 = beta2 * (one - cc) / (one - ca);
  const FieldElement t5 = prm.alpha1 * prm.alpha2 * (a[4] - b[1]) / (a[5] - b[0]);
  const FieldElement l5 = (a[4] - b[0]) * (a[5] - b[1]) / ((a[4] - b[1]) * (a[5] - b[0]));

  return SplitData{ca, cb, cc, beta1, beta2, {t12, t12, t34, t34, t5}, {l1, l2, l3, l4, l5}};
}

}  // namespace

Validation validate(const HoweParams& prm) {
  Validation out;
  auto add = [&](ErrorKind kind, std::string msg) {
    out.issues.push_back({kind, std::move(msg)});
  };

  if (prm.alpha1.is_zero()) add(ErrorKind::Degenerate, "alpha1 is zero");
  if (prm.alpha2.is_zero()) add(ErrorKind::Degenerate, "alpha2 is zero");

  const std::array<FieldElement, 8> all{prm.a[0], prm.a[1], prm.a[2], prm.a[3],
                                        prm.a[4], prm.a[5], prm.b[0], prm.b[1]};
  static constexpr const char* kNames[8] = {"a1", "a2", "a3", "a4", "a5", "a6", "b5", "b6"};
  bool distinct = true;
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      if (all[i] == all[j]) {
        distinct = false;
        add(ErrorKind::Degenerate, std::string(kNames[i]) + " = " + kNames[j] + " = " +
                                       std::to_string(all[i].value()));
      }
    }
  }
  if (!distinct) return out;

  const auto& a = prm.a;
  const auto& b = prm.b;
  if (!cross_ratio_condition({a[0], a[1], a[2], a[3], a[4], a[5]})) {
    add(ErrorKind::CrossRatioFailed,
        "(a2-a4)(a1-a6)(a3-a5) != (a2-a6)(a1-a5)(a3-a4)");
  }
  if (!cross_ratio_condition({a[0], a[1], a[2], a[3], b[0], b[1]})) {
    add(ErrorKind::CrossRatioFailed,
        "(a2-a4)(a1-b6)(a3-b5) != (a2-b6)(a1-b5)(a3-a4)");
  }

  const FieldElement ca = cross_ratio(a[0], a[1], a[2], a[3]);
  const FieldElement cb = cross_ratio(a[0], a[1], a[2], a[4]);
  const FieldElement cc = cross_ratio(a[0], a[1], a[2], b[0]);
  SquarenessReport& sq = out.squareness;
  sq.product_a4_a5 = legendre_symbol((a[0] - a[1]) * (a[1] - a[3]) * (a[3] - a[4]) * (a[4] - a[0]));
  sq.product_a4_b5 = legendre_symbol((a[0] - a[1]) * (a[1] - a[3]) * (a[3] - b[0]) * (b[0] - a[0]));
  sq.product_a5_b5 = legendre_symbol((a[0] - a[1]) * (a[1] - a[4]) * (a[4] - b[0]) * (b[0] - a[0]));
  sq.a_ab = legendre_symbol(ca * (ca - cb));
  sq.a_ac = legendre_symbol(ca * (ca - cc));
  if (sq.a_ab != 1) add(ErrorKind::NonSquareObstruction, "a(a - b) is not a nonzero square");
  if (sq.a_ac != 1) add(ErrorKind::NonSquareObstruction, "a(a - c) is not a nonzero square");
  if (!out.ok() || prm.alpha1.is_zero() || prm.alpha2.is_zero()) return out;

  const SplitData split = compute_split(prm, Branch::Canonical);
  for (int i = 0; i < 5; ++i) {
    const auto& lam = split.lambda[i];
    if (lam.is_zero() || lam == 1) {
      add(ErrorKind::DegenerateLambda,
          "lambda" + std::to_string(i + 1) + " = " + std::to_string(lam.value()));
    }
    if (split.theta[i].is_zero()) {
      add(ErrorKind::DegenerateLambda, "theta" + std::to_string(i + 1) + " = 0");
    }
  }
  return out;
}

void require_valid(const HoweParams& params) {
  const Validation v = validate(params);
  if (v.ok()) return;
  std::string msg = "invalid parameters:";
  for (const auto& issue : v.issues) {
    msg += " [";
    msg += to_string(issue.kind);
    msg += "] ";
    msg += issue.message;
    msg += ';';
  }
  throw HoweError(v.issues.front().kind, msg);
}

Decomposition decompose_genus5(const HoweParams& params, Branch branch) {
  require_valid(params);
  const Genus2Split s1 = split_genus2(params.c1(), branch);
  const Genus2Split s2 = split_genus2(params.c2(), branch);
  SplitData split = compute_split(params, branch);
  // Both routes implement the same formulas; a disagreement is a bug.
  if (!(s1.plus.theta() == split.theta[0] && s1.plus.lambda() == split.lambda[0] &&
        s1.minus.lambda() == split.lambda[1] && s2.plus.theta() == split.theta[2] &&
        s2.plus.lambda() == split.lambda[2] && s2.minus.lambda() == split.lambda[3])) {
    throw HoweError(ErrorKind::DecompositionMismatch,
                    "genus-2 splitting disagrees with the genus-5 definitions");
  }
  const LegendreCurve e5(split.theta[4], split.lambda[4]);
  return Decomposition{std::move(split), {s1.plus, s1.minus, s2.plus, s2.minus, e5}};
}

HoweCount howe_point_count(const HoweParams& params, int j) {
  const Decomposition dec = decompose_genus5(params);
  const std::array<PointCount, 3> quot{count_points(params.c1(), j), count_points(params.c2(), j),
                                       count_points(params.c3(), j)};
  std::array<PointCount, 5> factors{};
  for (int i = 0; i < 5; ++i) factors[i] = count_points(dec.factors[i], j);

  const auto q = static_cast<std::int64_t>(quot[0].q);
  const std::int64_t via_quotients = quot[0].count + quot[1].count + quot[2].count - 2 * q - 2;
  std::int64_t via_factors = -4 * q - 4;
  for (const auto& f : factors) via_factors += f.count;
  if (via_quotients != via_factors) {
    throw HoweError(ErrorKind::DecompositionMismatch,
                    "#C over F_" + std::to_string(q) + ": quotients give " +
                        std::to_string(via_quotients) + ", factors give " +
                        std::to_string(via_factors));
  }
  return HoweCount{{quot[0].q, via_factors, CountMethod::Decomposition}, quot, factors};
}

HoweCount howe_point_count_lifted(const HoweParams& params, int j) {
  const Decomposition dec = decompose_genus5(params);
  const std::uint64_t q = ipow(params.p(), static_cast<unsigned>(j));
  std::array<PointCount, 5> factors{};
  std::int64_t total = -4 * static_cast<std::int64_t>(q) - 4;
  for (int i = 0; i < 5; ++i) {
    const PointCount base = count_points(dec.factors[i], 1);
    factors[i] = {q, zeta_lift(base.count, params.p(), j),
                  j == 1 ? CountMethod::BruteForce : CountMethod::ZetaLift};
    total += factors[i].count;
  }
  return HoweCount{{q, total, CountMethod::ZetaLift}, std::nullopt, factors};
}

SerreVerdicts serre_verdicts(const HoweParams& params, const Decomposition& dec) {
  SerreVerdicts v;
  const PrimeModulus& mod = params.modulus;
  const std::uint64_t p = mod.p();
  const HassePolynomial hasse(mod);
  const FieldElement serre_target(mod, -static_cast<std::int64_t>(floor_two_sqrt(p)));

  bool all_fp = true;
  bool all_fp2 = true;
  bool all_fp3 = true;
  for (int i = 0; i < 5; ++i) {
    const LegendreCurve& e = dec.factors[i];
    const FieldElement h = hasse(e.lambda());
    const FieldElement t = trace_from_hasse(e.theta(), h);
    v.hasse_values[i] = h.value();
    v.traces[i] = t.value();
    all_fp = all_fp && t == serre_target;
    all_fp2 = all_fp2 && h.is_zero();
    all_fp3 = all_fp3 && serre_fp3_holds(t.value(), p);
  }
  if (p >= 17) v.serre_fp = all_fp;
  v.maximal_fp2 = all_fp2;
  if (p >= 11) v.serre_fp3 = all_fp3;

  std::array<std::int64_t, 5> n1{};
  for (int i = 0; i < 5; ++i) n1[i] = count_points(dec.factors[i], 1).count;
  for (int j = 1; j <= 3; ++j) {
    const auto q = static_cast<std::int64_t>(ipow(p, static_cast<unsigned>(j)));
    std::int64_t total = -4 * q - 4;
    for (int i = 0; i < 5; ++i) total += zeta_lift(n1[i], p, j);
    v.lifted_counts[j - 1] = total;
    v.count_mod4[j - 1] = total % 4 == 0;
  }
  return v;
}

SerreVerdicts serre_verdicts(const HoweParams& params) {
  return serre_verdicts(params, decompose_genus5(params));
}

DecompositionReport make_report(const HoweParams& params, const std::vector<int>& degrees) {
  const Validation validation = validate(params);
  if (!validation.ok()) require_valid(params);
  Decomposition dec = decompose_genus5(params);
  SerreVerdicts verdicts = serre_verdicts(params, dec);
  std::vector<HoweCount> counts;
  for (int j : degrees) {
    if (j < 1 || j > 3) {
      throw HoweError(ErrorKind::InvalidArgument,
                      "field degree " + std::to_string(j) + " not in {1, 2, 3}");
    }
    if (ipow(params.p(), static_cast<unsigned>(j)) <= kCountingCap) {
      counts.push_back(howe_point_count(params, j));
    } else {
      counts.push_back(howe_point_count_lifted(params, j));
    }
  }
  return DecompositionReport{params, std::move(dec), std::move(counts), verdicts,
                             validation.squareness};
}

}  // namespace howe

#include <doctest.h>

#include "howe/curve_models.hpp"
#include "howe/errors.hpp"
#include "howe/hasse.hpp"
#include "oracle.hpp"

using namespace howe;
using oracle::i64;

namespace {

// sum C(m, i)^2 t^i mod p with binomials from Pascal's triangle.
i64 hasse_reference(i64 p, i64 t) {
  const i64 m = (p - 1) / 2;
  std::vector<i64> row{1};
  for (i64 n = 1; n <= m; ++n) {
    std::vector<i64> next(n + 1, 1);
    for (i64 i = 1; i < n; ++i) next[i] = (row[i - 1] + row[i]) % p;
    row = next;
  }
  i64 s = 0, tp = 1;
  for (i64 i = 0; i <= m; ++i) {
    s = (s + row[i] * row[i] % p * tp) % p;
    tp = tp * t % p;
  }
  return s;
}

i64 lifted_reference(i64 n1, i64 p, int j) {
  const i64 a1 = p + 1 - n1;
  const i64 a2 = a1 * a1 - 2 * p;
  const i64 a3 = a1 * a1 * a1 - 3 * p * a1;
  const i64 q = j == 1 ? p : j == 2 ? p * p : p * p * p;
  return q + 1 - (j == 1 ? a1 : j == 2 ? a2 : a3);
}

}  // namespace

TEST_CASE("Hasse polynomial values") {
  const PrimeModulus m(11);
  CHECK(hasse_poly_eval(m, FieldElement(m, 0)).value() == 1);
  CHECK(hasse_poly_eval(m, FieldElement(m, 6)).value() == 0);
  CHECK(hasse_poly_eval(m, FieldElement(m, 1)).value() == 10);
  for (i64 p : {3, 5, 7, 11, 13, 31, 101, 499}) {
    const PrimeModulus mp(p);
    const HassePolynomial h(mp);
    for (i64 t = 0; t < p; t += (p > 100 ? 7 : 1)) {
      const i64 want = hasse_reference(p, t);
      CHECK(hasse_poly_eval(mp, FieldElement(mp, t)).value() == static_cast<std::uint64_t>(want));
      CHECK(h.eval(t) == static_cast<std::uint64_t>(want));
      CHECK(h(FieldElement(mp, t)).value() == static_cast<std::uint64_t>(want));
    }
  }
}

TEST_CASE("bounds") {
  CHECK(floor_two_sqrt(499) == 44);
  CHECK(floor_two_sqrt(4) == 4);
  CHECK(floor_two_sqrt(11) == 6);
  for (std::uint64_t q = 1; q < 3000; ++q) CHECK(floor_two_sqrt(q) == static_cast<std::uint64_t>(oracle::floor_two_sqrt(q)));
  CHECK(serre_bound(499, 5) == 720);
  CHECK(serre_bound(121, 5) == 232);
  CHECK(serre_bound(37 * 37 * 37, 5) == 52904);
  CHECK(serre_bound(499, 0) == 500);
}

TEST_CASE("trace residues") {
  const PrimeModulus m499(499), m11(11);
  CHECK(trace_mod_p(LegendreCurve(m499, 31, 438)).value() == 455);  // trace -44
  CHECK(trace_mod_p(LegendreCurve(m11, 8, 6)).value() == 0);
  CHECK_THROWS_AS(LegendreCurve(m11, 0, 5), HoweError);
  CHECK_THROWS_AS(LegendreCurve(m11, 2, 1), HoweError);
  CHECK_THROWS_AS(LegendreCurve(m11, 2, 0), HoweError);
}

TEST_CASE("trace residue agrees with enumeration") {
  for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23, 29}) {
    const PrimeModulus m(p);
    for (i64 theta = 1; theta < p; ++theta)
      for (i64 lam = 2; lam < p; ++lam) {
        const i64 n = oracle::count_fp(p, theta, {0, 1, lam});
        const LegendreCurve e(m, theta, lam);
        CHECK(trace_mod_p(e).value() == static_cast<std::uint64_t>(oracle::md(p + 1 - n, p)));
      }
  }
}

TEST_CASE("predicate thresholds") {
  const PrimeModulus m13(13), m7(7);
  try {
    (void)attains_serre_fp(LegendreCurve(m13, 1, 2));
    FAIL("p = 13 accepted");
  } catch (const HoweError& e) {
    CHECK(e.kind() == ErrorKind::HypothesisViolated);
  }
  CHECK_THROWS_AS(attains_serre_fp3(LegendreCurve(m7, 1, 2)), HoweError);
  CHECK_NOTHROW(maximal_fp2(LegendreCurve(m7, 1, 2)));
}

TEST_CASE("predicates agree with point counts") {
  for (i64 p : {17, 19, 23, 29, 31, 37}) {
    const PrimeModulus m(p);
    for (i64 theta = 1; theta < p; ++theta)
      for (i64 lam = 2; lam < p; ++lam) {
        const LegendreCurve e(m, theta, lam);
        const i64 n1 = oracle::count_fp(p, theta, {0, 1, lam});
        CHECK(attains_serre_fp(e) == (n1 == p + 1 + oracle::floor_two_sqrt(p)));
        CHECK(maximal_fp2(e) == (lifted_reference(n1, p, 2) == p * p + 1 + 2 * p));
        CHECK(attains_serre_fp3(e) ==
              (lifted_reference(n1, p, 3) == p * p * p + 1 + oracle::floor_two_sqrt(p * p * p)));
      }
  }
}

TEST_CASE("F_p^3 examples") {
  const PrimeModulus m37(37), m13(13);
  CHECK(attains_serre_fp3(LegendreCurve(m37, 26, 26)));
  CHECK(attains_serre_fp3(LegendreCurve(m37, 30, 10)));
  // p = 13 is 1 mod 4: no supersingular Legendre curve, nothing maximal.
  for (i64 lam = 2; lam < 13; ++lam) CHECK_FALSE(maximal_fp2(LegendreCurve(m13, 1, lam)));
}

TEST_CASE("zeta lift") {
  CHECK(zeta_lift(12, 11, 1) == 12);
  CHECK(zeta_lift(12, 11, 2) == 144);  // a1 = 0 gives q + 1 + 2p
  CHECK(zeta_lift(544, 499, 1) == 544);
  CHECK(zeta_lift(544, 499, 2) == lifted_reference(544, 499, 2));
  CHECK(zeta_lift(32, 37, 3) == lifted_reference(32, 37, 3));
  try {
    (void)zeta_lift(30, 11, 2);
    FAIL("Hasse violation accepted");
  } catch (const HoweError& e) {
    CHECK(e.kind() == ErrorKind::HasseViolation);
  }
  const TraceSequence t = TraceSequence::from_count(11, 12);
  CHECK(t.a[0] == 0);
  CHECK(t.a[1] == -22);
  CHECK(t.count_over(2) == 144);
  CHECK_THROWS_AS(TraceSequence::from_count(11, 2), HoweError);
}

TEST_CASE("zeta lift matches direct counts") {
  for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const PrimeModulus m(p);
    for (i64 theta = 1; theta < p; theta += 2)
      for (i64 lam = 2; lam < p; ++lam) {
        const i64 n1 = oracle::count_fp(p, theta, {0, 1, lam});
        CHECK(zeta_lift(n1, p, 2) == oracle::count_fp2(p, theta, {0, 1, lam}));
        if (p <= 13) CHECK(zeta_lift(n1, p, 3) == count_points(LegendreCurve(m, theta, lam), 3).count);
      }
  }
}

TEST_CASE("mod 4 check") {
  const PrimeModulus m(11);
  for (i64 lam = 2; lam < 11; ++lam)
    for (int j = 1; j <= 3; ++j) CHECK(mod4_check(LegendreCurve(m, 3, lam), j));
}

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// An optional argument N runs criterion N alone.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "howe/curve_models.hpp"
#include "howe/hasse.hpp"
#include "howe/howe_curve.hpp"
#include "howe/search.hpp"
#include "howe/serialization.hpp"
#include "howe/tables.hpp"
#include "oracle.hpp"
#include "sample.hpp"

using namespace howe;
using oracle::i64;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

i64 cube(i64 p) { return p * p * p; }

std::string row_str(const HoweParams& params) { return format_csv_row(params.to_row()); }

Outcome table1() {
  Outcome out;
  std::string counts;
  for (const auto& row : bundled_table(1)) {
    const auto params = HoweParams::from_row(row);
    const i64 p = row[0];
    if (!validate(params).ok()) out.fail("validate rejects " + row_str(params));
    const auto v = serre_verdicts(params);
    if (!v.serre_fp.value_or(false)) out.fail("verdict false for p=" + std::to_string(p));
    const i64 want = p + 1 + 5 * oracle::floor_two_sqrt(p);
    const i64 got = howe_point_count(params, 1).total.count;
    if (got != want)
      out.fail("p=" + std::to_string(p) + " count " + std::to_string(got) + " != " + std::to_string(want));
    counts += (counts.empty() ? "" : ", ") + std::to_string(got);
  }
  if (out.ok) out.detail = "counts " + counts + " equal p+1+5*floor(2 sqrt p)";
  return out;
}

Outcome table2() {
  Outcome out;
  std::size_t rows = 0;
  for (const auto& row : bundled_table(2)) {
    ++rows;
    const auto params = HoweParams::from_row(row);
    const i64 p = row[0];
    const i64 want = p * p + 1 + 10 * p;
    if (!serre_verdicts(params).maximal_fp2) out.fail("verdict false for p=" + std::to_string(p));
    if (p <= 215) {
      const i64 direct = howe_point_count(params, 2).total.count;
      if (direct != want) out.fail("p=" + std::to_string(p) + " direct " + std::to_string(direct));
    }
    const i64 lifted = howe_point_count_lifted(params, 2).total.count;
    if (lifted != want) out.fail("p=" + std::to_string(p) + " lifted " + std::to_string(lifted));
  }
  if (out.ok) out.detail = std::to_string(rows) + " rows, direct and lifted counts p^2+1+10p";
  return out;
}

Outcome table3() {
  Outcome out;
  for (const auto& row : bundled_table(3)) {
    const auto params = HoweParams::from_row(row);
    const i64 p = row[0];
    const i64 want = cube(p) + 1 + 5 * oracle::floor_two_sqrt(cube(p));
    if (!serre_verdicts(params).serre_fp3.value_or(false))
      out.fail("verdict false for p=" + std::to_string(p));
    const i64 lifted = howe_point_count_lifted(params, 3).total.count;
    if (lifted != want) out.fail("p=" + std::to_string(p) + " lifted " + std::to_string(lifted));
    if (p == 37) {
      const i64 direct = howe_point_count(params, 3).total.count;
      if (direct != want) out.fail("p=37 direct " + std::to_string(direct));
    }
  }
  if (out.ok) out.detail = "3 rows, lifted counts p^3+1+5*floor(2p sqrt p), direct at p=37";
  return out;
}

Outcome examples() {
  using Pairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  const std::vector<std::pair<int, Pairs>> cases{
      {1, {{31, 438}, {31, 198}, {95, 62}, {95, 302}, {342, 198}}},
      {2, {{8, 6}, {8, 2}, {8, 2}, {8, 10}, {3, 10}}},
      {3, {{26, 26}, {26, 4}, {4, 12}, {4, 34}, {30, 10}}}};
  Outcome out;
  for (auto [table, want] : cases) {
    const auto params = HoweParams::from_row(bundled_table(table).front());
    const auto dec = decompose_genus5(params);
    Pairs got;
    for (const auto& e : dec.factors) got.emplace_back(e.theta().value(), e.lambda().value());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) {
      std::string s = "p=" + std::to_string(params.p()) + " got";
      for (auto [t, l] : got) s += " (" + std::to_string(t) + "," + std::to_string(l) + ")";
      out.fail(s);
    }
  }
  if (out.ok) out.detail = "p=499, 11, 37 factor multisets match exactly";
  return out;
}

const std::vector<HoweParams>& property_sample() {
  static const std::vector<HoweParams> s = sample::valid_params(120, 101, 0x5eed);
  return s;
}

Outcome splitting_identity() {
  Outcome out;
  std::size_t checked = 0;
  for (const auto& params : property_sample()) {
    const i64 p = static_cast<i64>(params.p());
    const auto dec = decompose_genus5(params);
    i64 e[5];
    for (int i = 0; i < 5; ++i) e[i] = sample::oracle_count(dec.factors[i], 1);
    const bool ok = sample::oracle_count(params.c1(), 1) == e[0] + e[1] - (p + 1) &&
                    sample::oracle_count(params.c2(), 1) == e[2] + e[3] - (p + 1) &&
                    sample::oracle_count(params.c3(), 1) == e[4];
    if (!ok) out.fail("identity fails for " + row_str(params));
    ++checked;
  }
  if (out.ok) out.detail = std::to_string(checked) + " random valid parameter sets, p <= 101";
  return out;
}

Outcome count_formula() {
  Outcome out;
  std::size_t checked = 0;
  for (const auto& params : property_sample()) {
    const i64 p = static_cast<i64>(params.p());
    const auto dec = decompose_genus5(params);
    for (int j : {1, 2}) {
      const i64 q = j == 1 ? p : p * p;
      i64 via_factors = -4 * q - 4;
      for (const auto& f : dec.factors) via_factors += sample::oracle_count(f, j);
      const i64 via_quotients = sample::oracle_count(params.c1(), j) +
                                sample::oracle_count(params.c2(), j) +
                                sample::oracle_count(params.c3(), j) - 2 * q - 2;
      if (via_factors != via_quotients)
        out.fail("q=" + std::to_string(q) + " routes differ for " + row_str(params));
      if (howe_point_count(params, j).total.count != via_factors)
        out.fail("library count differs for " + row_str(params));
      ++checked;
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " (params, q) pairs, q = p and p^2";
  return out;
}

Outcome congruences() {
  Outcome out;
  std::size_t fp = 0, fp2 = 0;
  for (i64 p = 17; p <= 31; ++p) {
    if (!oracle::is_prime(p)) continue;
    const PrimeModulus m(p);
    for (i64 theta = 1; theta < p; ++theta)
      for (i64 lam = 2; lam < p; ++lam) {
        const LegendreCurve e(m, theta, lam);
        const i64 n1 = oracle::count_legendre(p, theta, lam, 1);
        if (attains_serre_fp(e) != (n1 == p + 1 + oracle::floor_two_sqrt(p)))
          out.fail("serre-fp disagreement at p=" + std::to_string(p));
        ++fp;
        if (p <= 23) {
          const i64 n2 = oracle::count_legendre(p, theta, lam, 2);
          if (maximal_fp2(e) != (n2 == p * p + 1 + 2 * p))
            out.fail("maximal disagreement at p=" + std::to_string(p));
          ++fp2;
        }
      }
  }
  if (out.ok)
    out.detail = std::to_string(fp) + " curves over F_p, " + std::to_string(fp2) + " over F_p^2";
  return out;
}

Outcome mod4() {
  Outcome out;
  std::mt19937_64 rng(0xface);
  std::vector<i64> primes;
  for (i64 p = 3; p <= 101; ++p)
    if (oracle::is_prime(p)) primes.push_back(p);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::uniform_int_distribution<int> degree(1, 3);
  for (int s = 0; s < 1000; ++s) {
    const i64 p = primes[pick(rng)];
    const i64 theta = std::uniform_int_distribution<i64>(1, p - 1)(rng);
    const i64 lam = std::uniform_int_distribution<i64>(2, p - 1)(rng);
    const int j = degree(rng);
    i64 n;
    if (j < 3) {
      n = oracle::count_legendre(p, theta, lam, j);
    } else if (p <= 47) {
      n = count_points(LegendreCurve(PrimeModulus(p), theta, lam), 3).count;
    } else {
      const i64 a1 = p + 1 - oracle::count_legendre(p, theta, lam, 1);
      n = cube(p) + 1 - (a1 * a1 * a1 - 3 * p * a1);
    }
    if (n % 4 != 0) out.fail("count " + std::to_string(n) + " at p=" + std::to_string(p));
  }
  std::size_t genus5 = 0;
  for (const auto& params : property_sample()) {
    for (int j : {1, 2, 3}) {
      const i64 n = j < 3 ? howe_point_count(params, j).total.count
                          : howe_point_count_lifted(params, j).total.count;
      if (n % 4 != 0) out.fail("genus-5 count " + std::to_string(n) + " for " + row_str(params));
      ++genus5;
    }
  }
  if (out.ok) out.detail = "1000 genus-1 samples, " + std::to_string(genus5) + " genus-5 counts";
  return out;
}

Outcome negative_control() {
  Outcome out;
  SearchConfig cfg;
  cfg.p_min = cfg.p_max = 13;
  cfg.target = SearchTarget::MaximalFp2;
  std::size_t hits = 0;
  const auto s = enumerate(cfg, [&](const SearchHit&) { ++hits; });
  if (hits != 0) out.fail(std::to_string(hits) + " hits at p=13");
  if (s.predicate_mismatches + s.confirmation_failures + s.congruence_violations != 0)
    out.fail("internal disagreement counters nonzero");
  if (s.stopped_early) out.fail("search stopped early");
  if (out.ok) out.detail = std::to_string(s.candidates) + " candidates, 0 hits";
  return out;
}

Outcome determinism() {
  Outcome out;
  auto hit_file = [](unsigned threads, bool jsonl) {
    SearchConfig cfg;
    cfg.p_min = 11;
    cfg.p_max = 31;
    cfg.target = SearchTarget::MaximalFp2;
    cfg.seed = 99;
    cfg.max_hits = 600;
    cfg.threads = threads;
    std::ostringstream os;
    enumerate(cfg, [&](const SearchHit& h) {
      os << (jsonl ? hit_to_json(h).dump() : format_csv_row(h.params.to_row())) << "\n";
    });
    return os.str();
  };
  for (bool jsonl : {false, true}) {
    const std::string base = hit_file(1, jsonl);
    if (base.empty()) out.fail("no hits");
    for (unsigned t : {2u, 4u, 7u})
      if (hit_file(t, jsonl) != base)
        out.fail(std::string(jsonl ? "jsonl" : "csv") + " differs with " + std::to_string(t) + " threads");
    if (hit_file(1, jsonl) != base) out.fail("repeat run differs");
  }
  if (out.ok) out.detail = "csv and jsonl identical for 1, 2, 4, 7 threads";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"table 1 rows attain the F_p bound", table1},
      {"table 2 rows are maximal over F_p^2", table2},
      {"table 3 rows attain the F_p^3 bound", table3},
      {"example factor multisets", examples},
      {"splitting identity on random parameters", splitting_identity},
      {"count formula agreement", count_formula},
      {"congruence predicates vs counting", congruences},
      {"counts divisible by 4", mod4},
      {"no maximal hits at p = 13", negative_control},
      {"search determinism across thread counts", determinism},
  };
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
    return 2;
  }
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    if (only != 0 && index != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%s) [%.2fs]\n", o.ok ? "PASS" : "FAIL", index, name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}

#include "howe/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "howe/parallel.hpp"

namespace howe {

std::string_view to_string(SearchTarget target) noexcept {
  switch (target) {
    case SearchTarget::SerreFp: return "serre-fp";
    case SearchTarget::MaximalFp2: return "maximal-fp2";
    case SearchTarget::SerreFp3: return "serre-fp3";
  }
  return "unknown";
}

std::optional<SearchTarget> parse_search_target(std::string_view name) noexcept {
  if (name == "serre-fp") return SearchTarget::SerreFp;
  if (name == "maximal-fp2") return SearchTarget::MaximalFp2;
  if (name == "serre-fp3") return SearchTarget::SerreFp3;
  return std::nullopt;
}

int target_degree(SearchTarget target) noexcept {
  switch (target) {
    case SearchTarget::SerreFp: return 1;
    case SearchTarget::MaximalFp2: return 2;
    case SearchTarget::SerreFp3: return 3;
  }
  return 1;
}

namespace {

std::uint64_t minimum_prime(SearchTarget target) {
  switch (target) {
    case SearchTarget::SerreFp: return 17;
    case SearchTarget::MaximalFp2: return 3;
    case SearchTarget::SerreFp3: return 11;
  }
  return 3;
}

}  // namespace

void SearchConfig::check() const {
  if (p_max < p_min) {
    throw HoweError(ErrorKind::InvalidArgument, "empty prime range: p_max < p_min");
  }
  if (p_max >= kMaxPrime) {
    throw HoweError(ErrorKind::ModulusTooLarge, "p_max exceeds the supported cap 2^20");
  }
  const std::uint64_t floor_p = minimum_prime(target);
  if (p_min < floor_p) {
    throw HoweError(ErrorKind::HypothesisViolated,
                    std::string(to_string(target)) + " requires p_min >= " +
                        std::to_string(floor_p) + ", got " + std::to_string(p_min));
  }
  if (normalize && (fixed[static_cast<std::size_t>(Slot::A1)] ||
                    fixed[static_cast<std::size_t>(Slot::A2)])) {
    throw HoweError(ErrorKind::InvalidArgument,
                    "normalization pins a1 and a2; do not fix them explicitly");
  }
}

std::optional<FieldElement> solve_linear_root(const std::array<FieldElement, 5>& x) {
  // K1 (x1 - y) = K2 (x2 - y)  =>  (K2 - K1) y = K2 x2 - K1 x1
  const FieldElement k1 = (x[1] - x[3]) * (x[2] - x[4]);
  const FieldElement k2 = (x[0] - x[4]) * (x[2] - x[3]);
  const FieldElement u = k2 - k1;
  if (u.is_zero()) return std::nullopt;
  const FieldElement y = (k2 * x[1] - k1 * x[0]) / u;
  for (const auto& v : x) {
    if (v == y) return std::nullopt;
  }
  return y;
}

Json hit_to_json(const SearchHit& hit) {
  Json j = params_to_json(hit.params);
  j["factors"] = Json::array();
  for (const auto& e : hit.report.decomposition.factors) {
    j["factors"].push_back({{"theta", e.theta().value()}, {"lambda", e.lambda().value()}});
  }
  if (!hit.report.counts.empty()) {
    const PointCount& c = hit.report.counts.front().total;
    j["count"] = {{"q", c.q}, {"count", c.count}, {"method", std::string(to_string(c.method))}};
  }
  j["verdicts"] = verdicts_to_json(hit.report.verdicts);
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

// Per-prime lookup tables over raw residues.
struct PrimeTables {
  PrimeModulus mod;
  std::vector<std::int8_t> chi;      // Legendre symbol
  std::vector<std::uint32_t> root;   // canonical square root of squares
  std::vector<std::uint32_t> inv;    // inverses, inv[0] unused
  std::vector<std::uint32_t> hasse;  // H_p(lambda), empty when evaluated on demand
  HassePolynomial hasse_poly;

  explicit PrimeTables(const PrimeModulus& m, unsigned workers)
      : mod(m), chi(m.p(), -1), root(m.p(), 0), inv(m.p(), 0), hasse_poly(m) {
    const std::uint64_t p = m.p();
    chi[0] = 0;
    for (std::uint64_t r = 1; r <= m.half(); ++r) {
      const std::uint64_t sq = mul_mod(r, r, p);
      chi[sq] = 1;
      root[sq] = static_cast<std::uint32_t>(r);
    }
    for (std::uint64_t v = 1; v < p; ++v) inv[v] = static_cast<std::uint32_t>(inv_mod(v, p));
    if (p <= kEagerHasseLimit) {
      hasse.resize(p);
      parallel_for(p, workers, [&](std::uint64_t lam) {
        hasse[lam] = static_cast<std::uint32_t>(hasse_poly.eval(lam));
      });
    }
  }

  std::uint64_t h(std::uint64_t lam) const {
    return hasse.empty() ? hasse_poly.eval(lam) : hasse[lam];
  }

  static constexpr std::uint64_t kEagerHasseLimit = 1 << 16;
};

std::vector<std::int64_t> slot_domain(const SearchConfig& cfg, Slot slot, std::uint64_t p) {
  const auto idx = static_cast<std::size_t>(slot);
  const bool is_alpha = slot == Slot::Alpha1 || slot == Slot::Alpha2;
  if (cfg.normalize && (slot == Slot::A1 || slot == Slot::A2)) {
    return {slot == Slot::A1 ? 0 : 1};
  }
  if (cfg.fixed[idx]) {
    const std::uint64_t v = reduce_signed(*cfg.fixed[idx], p);
    if (is_alpha && v == 0) return {};
    return {static_cast<std::int64_t>(v)};
  }
  std::vector<std::int64_t> values(is_alpha ? p - 1 : p);
  std::iota(values.begin(), values.end(), is_alpha ? 1 : 0);
  if (cfg.seed != 0) {
    std::mt19937_64 rng(cfg.seed ^ (p * 0x9E3779B97F4A7C15ULL) ^ (idx * 0xBF58476D1CE4E5B9ULL));
    // Fisher-Yates on raw engine output; std::shuffle is not portable across
    // standard libraries.
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[rng() % i]);
    }
  }
  return values;
}

struct LocalHit {
  std::uint64_t offset;  // candidate offset within the block
  SearchHit hit;
};

struct BlockResult {
  std::uint64_t candidates = 0;
  std::uint64_t root_tuples = 0;
  std::uint64_t underivable = 0;
  std::uint64_t invalid = 0;
  std::uint64_t predicate_mismatches = 0;
  std::uint64_t confirmation_failures = 0;
  std::uint64_t congruence_violations = 0;
  std::vector<LocalHit> hits;
};

class PrimeSearch {
 public:
  PrimeSearch(const SearchConfig& cfg, const PrimeModulus& mod, unsigned workers,
              Clock::time_point start)
      : cfg_(cfg),
        mod_(mod),
        p_(mod.p()),
        tables_(mod, workers),
        start_(start),
        degree_(target_degree(cfg.target)),
        q_(ipow(p_, static_cast<unsigned>(degree_))) {
    for (std::size_t s = 0; s < kSlotCount; ++s) {
      domains_[s] = slot_domain(cfg, static_cast<Slot>(s), p_);
    }
    alpha_pairs_ = domain(Slot::Alpha1).size() * domain(Slot::Alpha2).size();
    serre_target_ = reduce_signed(-static_cast<std::int64_t>(floor_two_sqrt(p_)), p_);
    switch (cfg.target) {
      case SearchTarget::SerreFp: expected_count_ = serre_bound(p_, 5); break;
      case SearchTarget::MaximalFp2: expected_count_ = p_ * p_ + 1 + 10 * p_; break;
      case SearchTarget::SerreFp3: expected_count_ = serre_bound(q_, 5); break;
    }
  }

  std::uint64_t block_count() const {
    return domain(Slot::A1).size() * domain(Slot::A2).size();
  }

  BlockResult run_block(std::uint64_t block) const;

 private:
  const std::vector<std::int64_t>& domain(Slot s) const {
    return domains_[static_cast<std::size_t>(s)];
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, p_); }
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const { return mul(a, tables_.inv[b]); }

  // Linear cross-ratio solve on raw residues; p_ when infeasible.
  std::uint64_t solve(std::uint64_t x1, std::uint64_t x2, std::uint64_t x3, std::uint64_t x4,
                      std::uint64_t x5) const {
    const std::uint64_t k1 = mul(sub(x2, x4), sub(x3, x5));
    const std::uint64_t k2 = mul(sub(x1, x5), sub(x3, x4));
    const std::uint64_t u = sub(k2, k1);
    if (u == 0) return p_;
    return div(sub(mul(k2, x2), mul(k1, x1)), u);
  }

  std::uint64_t cross(std::uint64_t x1, std::uint64_t x2, std::uint64_t x3,
                      std::uint64_t x4) const {
    return div(mul(sub(x1, x3), sub(x2, x4)), mul(sub(x2, x3), sub(x1, x4)));
  }

  // Which (chi(alpha1), chi(alpha2)) classes pass the target on base traces.
  bool class_passes(const std::array<std::uint64_t, 5>& base, int s1, int s2) const;

  void confirm(const HoweParams& params, BlockResult& out, std::uint64_t offset,
               std::map<std::pair<int, int>, std::optional<HoweCount>>& cache) const;

  const SearchConfig& cfg_;
  PrimeModulus mod_;
  std::uint64_t p_;
  PrimeTables tables_;
  Clock::time_point start_;
  int degree_;
  std::uint64_t q_;
  std::array<std::vector<std::int64_t>, kSlotCount> domains_;
  std::uint64_t alpha_pairs_ = 0;
  std::uint64_t serre_target_ = 0;
  std::uint64_t expected_count_ = 0;
};

bool PrimeSearch::class_passes(const std::array<std::uint64_t, 5>& base, int s1, int s2) const {
  const std::array<int, 5> sign{s1, s1, s2, s2, s1 * s2};
  for (int i = 0; i < 5; ++i) {
    const std::uint64_t t = sign[i] > 0 ? base[i] : sub(0, base[i]);
    switch (cfg_.target) {
      case SearchTarget::SerreFp:
        if (t != serre_target_) return false;
        break;
      case SearchTarget::MaximalFp2:
        if (t != 0) return false;
        break;
      case SearchTarget::SerreFp3:
        if (!serre_fp3_holds(t, p_)) return false;
        break;
    }
  }
  return true;
}

void PrimeSearch::confirm(const HoweParams& params, BlockResult& out, std::uint64_t offset,
                          std::map<std::pair<int, int>, std::optional<HoweCount>>& cache) const {
  const Validation validation = validate(params);
  if (!validation.ok()) {
    ++out.predicate_mismatches;
    return;
  }
  Decomposition dec = decompose_genus5(params);
  const SerreVerdicts verdicts = serre_verdicts(params, dec);
  bool verdict = false;
  switch (cfg_.target) {
    case SearchTarget::SerreFp: verdict = verdicts.serre_fp.value_or(false); break;
    case SearchTarget::MaximalFp2: verdict = verdicts.maximal_fp2; break;
    case SearchTarget::SerreFp3: verdict = verdicts.serre_fp3.value_or(false); break;
  }
  if (!verdict) {
    ++out.predicate_mismatches;
    return;
  }
  if (cfg_.target == SearchTarget::MaximalFp2 && p_ % 4 != 3) {
    ++out.congruence_violations;
    return;
  }

  // Point counts over F_{p^j} depend on alpha1, alpha2 only through their
  // square classes in F_{p^j} (y -> u y), so one count serves each class.
  auto klass = [&](const FieldElement& alpha) {
    return degree_ % 2 == 0 ? 1 : legendre_symbol(alpha);
  };
  const auto key = std::make_pair(klass(params.alpha1), klass(params.alpha2));
  auto& slot = cache[key];
  if (!slot) {
    slot = q_ <= cfg_.confirm_cap ? howe_point_count(params, degree_)
                                  : howe_point_count_lifted(params, degree_);
  }
  if (slot->total.count != static_cast<std::int64_t>(expected_count_) ||
      slot->total.count % 4 != 0) {
    ++out.confirmation_failures;
    return;
  }
  DecompositionReport report{params, std::move(dec), {*slot}, verdicts, validation.squareness};
  out.hits.push_back(LocalHit{
      offset, SearchHit{params, std::move(report),
                        std::chrono::duration<double>(Clock::now() - start_)}});
}

BlockResult PrimeSearch::run_block(std::uint64_t block) const {
  BlockResult out;
  const auto& d2 = domain(Slot::A2);
  const auto a1 = static_cast<std::uint64_t>(domain(Slot::A1)[block / d2.size()]);
  const auto a2 = static_cast<std::uint64_t>(d2[block % d2.size()]);
  if (a1 == a2) return out;

  for (const auto v3 : domain(Slot::A3)) {
    const auto a3 = static_cast<std::uint64_t>(v3);
    if (a3 == a1 || a3 == a2) continue;
    for (const auto v4 : domain(Slot::A4)) {
      const auto a4 = static_cast<std::uint64_t>(v4);
      if (a4 == a1 || a4 == a2 || a4 == a3) continue;
      for (const auto v5 : domain(Slot::A5)) {
        const auto a5 = static_cast<std::uint64_t>(v5);
        if (a5 == a1 || a5 == a2 || a5 == a3 || a5 == a4) continue;
        for (const auto vb : domain(Slot::B5)) {
          const auto b5 = static_cast<std::uint64_t>(vb);
          if (b5 == a1 || b5 == a2 || b5 == a3 || b5 == a4 || b5 == a5) continue;

          const std::uint64_t tuple_offset = out.candidates;
          ++out.root_tuples;
          out.candidates += alpha_pairs_;

          const std::uint64_t a6 = solve(a1, a2, a3, a4, a5);
          const std::uint64_t b6 = solve(a1, a2, a3, a4, b5);
          if (a6 == p_ || b6 == p_ || a6 == b6) {
            ++out.underivable;
            continue;
          }
          bool collide = false;
          for (auto v : {a1, a2, a3, a4, a5, b5}) collide = collide || v == a6 || v == b6;
          if (collide) {
            ++out.underivable;
            continue;
          }

          // Predicate-first filter on raw residues.
          const std::uint64_t ca = cross(a1, a2, a3, a4);
          const std::uint64_t cb = cross(a1, a2, a3, a5);
          const std::uint64_t cc = cross(a1, a2, a3, b5);
          const std::uint64_t dab = mul(ca, sub(ca, cb));
          const std::uint64_t dac = mul(ca, sub(ca, cc));
          if (tables_.chi[dab] != 1 || tables_.chi[dac] != 1) {
            ++out.invalid;
            continue;
          }
          auto lambdas = [&](std::uint64_t other, std::uint64_t disc) {
            const std::uint64_t r2 = mul(2, tables_.root[disc]);
            const std::uint64_t scale = div(sub(1, ca), sub(other, 1));
            const std::uint64_t base = sub(other, mul(2, ca));
            return std::make_pair(mul(scale, (base + r2) % p_), mul(scale, sub(base, r2)));
          };
          const auto [l1, l2] = lambdas(cb, dab);
          const auto [l3, l4] = lambdas(cc, dac);
          const std::uint64_t l5 =
              div(mul(sub(a5, b5), sub(a6, b6)), mul(sub(a5, b6), sub(a6, b5)));
          const std::array<std::uint64_t, 5> lam{l1, l2, l3, l4, l5};
          if (std::any_of(lam.begin(), lam.end(), [](auto l) { return l <= 1; })) {
            ++out.invalid;
            continue;
          }

          // theta_i without alpha: theta_{1,2} = alpha1 k12, theta_{3,4} =
          // alpha2 k34, theta_5 = alpha1 alpha2 k5. Since alpha^m = chi(alpha),
          // (-theta_i)^m H_p(lambda_i) = chi(alpha-part) (-k_i)^m H_p(lambda_i).
          const std::uint64_t common = mul(sub(a2, a3), sub(a1, a4));
          const std::uint64_t k12 =
              div(mul(mul(common, mul(sub(a1, a5), sub(a1, a6))), sub(1, cb)), sub(1, ca));
          const std::uint64_t k34 =
              div(mul(mul(common, mul(sub(a1, b5), sub(a1, b6))), sub(1, cc)), sub(1, ca));
          const std::uint64_t k5 = div(sub(a5, b6), sub(a6, b5));
          const std::array<std::uint64_t, 5> k{k12, k12, k34, k34, k5};
          std::array<std::uint64_t, 5> base{};
          for (int i = 0; i < 5; ++i) {
            base[i] = mul(pow_mod(sub(0, k[i]), mod_.half(), p_), tables_.h(lam[i]));
          }

          std::array<std::array<bool, 2>, 2> pass{};
          bool any = false;
          for (int s1 = 0; s1 < 2; ++s1) {
            for (int s2 = 0; s2 < 2; ++s2) {
              pass[s1][s2] = class_passes(base, s1 == 0 ? 1 : -1, s2 == 0 ? 1 : -1);
              any = any || pass[s1][s2];
            }
          }
          if (!any) continue;

          std::map<std::pair<int, int>, std::optional<HoweCount>> cache;
          std::uint64_t offset = tuple_offset;
          for (const auto al1 : domain(Slot::Alpha1)) {
            const int s1 = tables_.chi[static_cast<std::uint64_t>(al1)] == 1 ? 0 : 1;
            for (const auto al2 : domain(Slot::Alpha2)) {
              const int s2 = tables_.chi[static_cast<std::uint64_t>(al2)] == 1 ? 0 : 1;
              if (pass[s1][s2]) {
                const HoweParams::Row row{static_cast<std::int64_t>(p_),
                                          al1,
                                          al2,
                                          static_cast<std::int64_t>(a1),
                                          static_cast<std::int64_t>(a2),
                                          static_cast<std::int64_t>(a3),
                                          static_cast<std::int64_t>(a4),
                                          static_cast<std::int64_t>(a5),
                                          static_cast<std::int64_t>(a6),
                                          static_cast<std::int64_t>(b5),
                                          static_cast<std::int64_t>(b6)};
                confirm(HoweParams::from_row(row), out, offset, cache);
              }
              ++offset;
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

SearchSummary enumerate(const SearchConfig& config,
                        const std::function<void(const SearchHit&)>& on_hit) {
  config.check();
  const auto start = Clock::now();
  const unsigned workers = config.threads == 0 ? worker_count() : config.threads;
  SearchSummary summary;

  auto out_of_time = [&] {
    return config.time_budget && Clock::now() - start >= *config.time_budget;
  };

  for (std::uint64_t p = config.p_min; p <= config.p_max && !summary.stopped_early; ++p) {
    if (p < 3 || !is_prime(p)) continue;
    ++summary.primes;
    const PrimeModulus mod(p);
    const PrimeSearch search(config, mod, workers, start);
    const std::uint64_t blocks = search.block_count();
    const std::uint64_t wave = std::max<std::uint64_t>(1, std::uint64_t{workers} * 4);
    std::uint64_t prime_candidates = 0;
    bool prime_done = false;

    for (std::uint64_t first = 0; first < blocks && !prime_done; first += wave) {
      const std::uint64_t count = std::min(wave, blocks - first);
      std::vector<BlockResult> results(count);
      parallel_for(count, workers,
                   [&](std::uint64_t i) { results[i] = search.run_block(first + i); });

      for (auto& r : results) {
        std::uint64_t allowed = r.candidates;
        if (config.max_candidates_per_prime != 0 &&
            prime_candidates + r.candidates >= config.max_candidates_per_prime) {
          allowed = config.max_candidates_per_prime - prime_candidates;
          prime_done = true;
        }
        prime_candidates += allowed;
        summary.candidates += allowed;
        summary.root_tuples += r.root_tuples;
        summary.underivable += r.underivable;
        summary.invalid += r.invalid;
        summary.predicate_mismatches += r.predicate_mismatches;
        summary.confirmation_failures += r.confirmation_failures;
        summary.congruence_violations += r.congruence_violations;
        for (const auto& h : r.hits) {
          if (h.offset >= allowed) break;
          on_hit(h.hit);
          ++summary.hits;
          if (config.max_hits != 0 && summary.hits >= config.max_hits) {
            summary.stopped_early = true;
            break;
          }
        }
        if (prime_done || summary.stopped_early) break;
      }
      if (summary.stopped_early) break;
      if (out_of_time()) {
        summary.stopped_early = true;
        break;
      }
    }
  }
  summary.elapsed = Clock::now() - start;
  return summary;
}

}  // namespace howe

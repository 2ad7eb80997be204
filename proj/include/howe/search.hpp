#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "howe/howe_curve.hpp"
#include "howe/serialization.hpp"

namespace howe {

enum class SearchTarget { SerreFp, MaximalFp2, SerreFp3 };

std::string_view to_string(SearchTarget target) noexcept;
/// Accepts "serre-fp", "maximal-fp2", "serre-fp3".
std::optional<SearchTarget> parse_search_target(std::string_view name) noexcept;

/// Field degree j whose point count the target is about.
int target_degree(SearchTarget target) noexcept;

/// Slots that can be pinned to a single value.
enum class Slot { Alpha1, Alpha2, A1, A2, A3, A4, A5, B5 };
inline constexpr std::size_t kSlotCount = 8;

struct SearchConfig {
  std::uint64_t p_min = 0;
  std::uint64_t p_max = 0;
  SearchTarget target = SearchTarget::SerreFp;

  /// Zero means unlimited.
  std::uint64_t max_candidates_per_prime = 0;
  std::uint64_t max_hits = 0;
  /// Checked between work waves; a run stopped by it is not reproducible.
  std::optional<std::chrono::milliseconds> time_budget;

  /// Zero keeps ascending order; otherwise every slot's value order is a
  /// seeded permutation.
  std::uint64_t seed = 0;
  /// Pins a1 = 0 and a2 = 1 (affine normalization).
  bool normalize = false;
  std::array<std::optional<std::int64_t>, kSlotCount> fixed{};

  /// Zero means worker_count().
  unsigned threads = 0;
  /// Hits are confirmed by direct counting up to this many field elements,
  /// by the zeta lift of F_p counts above it.
  std::uint64_t confirm_cap = 1'000'000;

  /// Throws HoweError(InvalidArgument) or HoweError(HypothesisViolated).
  void check() const;
};

struct SearchHit {
  HoweParams params;
  DecompositionReport report;
  std::chrono::duration<double> wall_time;
};

struct SearchSummary {
  std::uint64_t primes = 0;
  std::uint64_t candidates = 0;       // (alpha1, alpha2, a1..a5, b5) tuples visited
  std::uint64_t root_tuples = 0;      // (a1..a5, b5) tuples visited
  std::uint64_t underivable = 0;      // a6 or b6 missing or colliding
  std::uint64_t invalid = 0;          // rejected by the hypotheses
  std::uint64_t hits = 0;
  std::uint64_t predicate_mismatches = 0;    // fast filter vs library predicates
  std::uint64_t confirmation_failures = 0;   // predicates vs counting oracle
  std::uint64_t congruence_violations = 0;   // maximal hit with p != 3 mod 4
  bool stopped_early = false;
  std::chrono::duration<double> elapsed{};
};

/// Solves the cross-ratio equality (x2-x4)(x1-y)(x3-x5) = (x2-y)(x1-x5)(x3-x4)
/// for y, which is linear in y. Empty when the coefficient vanishes or y
/// collides with one of the fixed values.
std::optional<FieldElement> solve_linear_root(const std::array<FieldElement, 5>& fixed);

/// Walks the configured parameter space and calls on_hit for every confirmed
/// hit, in candidate order, independent of the thread count.
SearchSummary enumerate(const SearchConfig& config,
                        const std::function<void(const SearchHit&)>& on_hit);

/// One JSON object per hit: parameters, factors and verdicts.
Json hit_to_json(const SearchHit& hit);

}  // namespace howe

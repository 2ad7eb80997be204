#include "howe/curve_models.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "howe/parallel.hpp"

namespace howe {

std::string_view to_string(CountMethod method) noexcept {
  switch (method) {
    case CountMethod::BruteForce: return "brute-force";
    case CountMethod::ZetaLift: return "zeta-lift";
    case CountMethod::Decomposition: return "decomposition";
  }
  return "unknown";
}

HyperellipticModel::HyperellipticModel(const FieldElement& alpha,
                                       std::vector<FieldElement> roots)
    : alpha_(alpha), roots_(std::move(roots)) {
  if (alpha_.is_zero()) {
    throw HoweError(ErrorKind::Degenerate, "leading coefficient alpha must be nonzero");
  }
  if (roots_.size() < 3 || roots_.size() > 6) {
    throw HoweError(ErrorKind::Degenerate,
                    "expected 3 to 6 roots, got " + std::to_string(roots_.size()));
  }
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (!(roots_[i].modulus() == alpha_.modulus())) {
      throw HoweError(ErrorKind::ModulusMismatch, "root and alpha in different fields");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (roots_[i] == roots_[j]) {
        throw HoweError(ErrorKind::Degenerate,
                        "repeated root " + std::to_string(roots_[i].value()));
      }
    }
  }
}

HyperellipticModel HyperellipticModel::from_legendre(const LegendreCurve& e) {
  const PrimeModulus& mod = e.modulus();
  return HyperellipticModel(e.theta(), {FieldElement(mod, 0), FieldElement(mod, 1), e.lambda()});
}

CharacterTable::CharacterTable(const PrimeModulus& modulus, int k)
    : field_(k == 1 ? ExtensionField::prime_field(modulus) : build_extension(modulus, k)),
      table_(field_.size(), -1) {
  table_[0] = 0;
  const std::uint64_t q = field_.size();
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    const ExtCoeffs x = field_.from_index(idx);
    table_[field_.index(field_.mul(x, x))] = 1;
  }
}

namespace {

struct TableCache {
  std::mutex mutex;
  std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const CharacterTable>> tables;
  std::uint64_t bytes = 0;
};

TableCache& table_cache() {
  static TableCache cache;
  return cache;
}

constexpr std::uint64_t kCacheBytes = std::uint64_t{96} << 20;

void check_cap(std::uint64_t p, int j) {
  if (j < 1 || j > 3) {
    throw HoweError(ErrorKind::InvalidArgument,
                    "field degree " + std::to_string(j) + " not in {1, 2, 3}");
  }
  if (ipow(p, static_cast<unsigned>(j)) > kCountingCap) {
    throw HoweError(ErrorKind::CapExceeded,
                    "F_" + std::to_string(p) + "^" + std::to_string(j) +
                        " exceeds the direct counting cap of " +
                        std::to_string(kCountingCap) + " elements");
  }
}

}  // namespace

std::shared_ptr<const CharacterTable> character_table(const PrimeModulus& modulus, int k) {
  check_cap(modulus.p(), k);
  const auto key = std::make_pair(modulus.p(), k);
  thread_local std::pair<std::uint64_t, int> last_key{0, 0};
  thread_local std::shared_ptr<const CharacterTable> last_table;
  if (last_table && last_key == key) return last_table;

  TableCache& cache = table_cache();
  auto remember = [&](std::shared_ptr<const CharacterTable> t) {
    last_key = key;
    last_table = t;
    return t;
  };
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.tables.find(key); it != cache.tables.end()) return remember(it->second);
  }
  // Built outside the lock; a concurrent duplicate build is harmless.
  auto table = std::make_shared<const CharacterTable>(modulus, k);
  std::lock_guard lock(cache.mutex);
  if (auto it = cache.tables.find(key); it != cache.tables.end()) return remember(it->second);
  const std::uint64_t size = table->field().size();
  if (cache.bytes + size > kCacheBytes) {
    cache.tables.clear();
    cache.bytes = 0;
  }
  cache.tables.emplace(key, table);
  cache.bytes += size;
  return remember(table);
}

PointCount count_points(const HyperellipticModel& h, int j) {
  check_cap(h.p(), j);
  const auto table = character_table(h.modulus(), j);
  const ExtensionField& field = table->field();
  const std::uint64_t q = field.size();
  const std::uint64_t p = h.p();

  std::vector<std::uint64_t> roots;
  roots.reserve(h.roots().size());
  for (const auto& r : h.roots()) roots.push_back(r.value());
  const std::uint64_t alpha = h.alpha().value();

  const std::int64_t affine = parallel_sum(
      q, worker_count(), [&](std::uint64_t begin, std::uint64_t end) {
        std::int64_t sum = 0;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
          const ExtCoeffs x = field.from_index(idx);
          ExtCoeffs value{alpha, 0, 0};
          for (std::uint64_t r : roots) {
            ExtCoeffs factor = x;
            factor[0] = factor[0] >= r ? factor[0] - r : factor[0] + p - r;
            value = field.mul(value, factor);
          }
          sum += 1 + table->chi(value);
        }
        return sum;
      });

  const std::int64_t at_infinity =
      h.degree() % 2 == 1 ? 1 : 1 + table->chi(ExtCoeffs{alpha, 0, 0});
  const std::int64_t count = affine + at_infinity;

  // Weil interval: (q + 1 - N)^2 <= 4 g^2 q.
  const std::int64_t dev = static_cast<std::int64_t>(q) + 1 - count;
  const auto g = static_cast<std::uint64_t>(h.genus());
  if (static_cast<std::uint64_t>(dev * dev) > 4 * g * g * q) {
    throw HoweError(ErrorKind::HasseViolation,
                    "count " + std::to_string(count) + " over F_" + std::to_string(q) +
                        " lies outside the Weil interval");
  }
  return {q, count, CountMethod::BruteForce};
}

PointCount count_points(const LegendreCurve& e, int j) {
  return count_points(HyperellipticModel::from_legendre(e), j);
}

std::int64_t curve_trace(const HyperellipticModel& h, int j) {
  const PointCount c = count_points(h, j);
  return static_cast<std::int64_t>(c.q) + 1 - c.count;
}

PointCount count_points_or_lift(const LegendreCurve& e, int j) {
  if (j < 1 || j > 3) {
    throw HoweError(ErrorKind::InvalidArgument,
                    "field degree " + std::to_string(j) + " not in {1, 2, 3}");
  }
  if (ipow(e.p(), static_cast<unsigned>(j)) <= kCountingCap) return count_points(e, j);
  const PointCount base = count_points(e, 1);
  return {ipow(e.p(), static_cast<unsigned>(j)), zeta_lift(base.count, e.p(), j),
          CountMethod::ZetaLift};
}

}  // namespace howe

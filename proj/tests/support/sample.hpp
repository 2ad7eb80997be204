#pragma once

#include <random>
#include <vector>

#include "howe/howe_curve.hpp"
#include "oracle.hpp"

namespace sample {

// Rows accepted by validate(), drawn from primes in [11, p_max].
inline std::vector<howe::HoweParams> valid_params(std::size_t n, std::int64_t p_max,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> primes;
  for (std::int64_t p = 11; p <= p_max; ++p)
    if (oracle::is_prime(p)) primes.push_back(p);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  std::vector<howe::HoweParams> out;
  while (out.size() < n) {
    const auto row = oracle::random_cross_ratio_row(primes[pick(rng)], rng);
    if (!row) continue;
    const auto params = howe::HoweParams::from_row(*row);
    if (howe::validate(params).ok()) out.push_back(params);
  }
  return out;
}

inline std::vector<std::int64_t> roots_of(const howe::HyperellipticModel& h) {
  std::vector<std::int64_t> r;
  for (const auto& x : h.roots()) r.push_back(static_cast<std::int64_t>(x.value()));
  return r;
}

// Count of a library model through the test-side enumeration.
inline std::int64_t oracle_count(const howe::HyperellipticModel& h, int j) {
  const auto p = static_cast<std::int64_t>(h.p());
  const auto alpha = static_cast<std::int64_t>(h.alpha().value());
  return j == 1 ? oracle::count_fp(p, alpha, roots_of(h)) : oracle::count_fp2(p, alpha, roots_of(h));
}

inline std::int64_t oracle_count(const howe::LegendreCurve& e, int j) {
  return oracle::count_legendre(static_cast<std::int64_t>(e.p()),
                                static_cast<std::int64_t>(e.theta().value()),
                                static_cast<std::int64_t>(e.lambda().value()), j);
}

}  // namespace sample

#pragma once

// Test-side reference implementations. Everything here is plain integer
// enumeration and shares no code with the library under test.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 md(i64 x, i64 p) {
  x %= p;
  return x < 0 ? x + p : x;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Largest r with r*r <= n, by stepping.
inline i64 floor_sqrt(i64 n) {
  i64 r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// floor(2 sqrt(q)) = largest t with t*t <= 4q.
inline i64 floor_two_sqrt(i64 q) { return floor_sqrt(4 * q); }

// Number of y in F_p with y^2 = v.
inline std::vector<int> square_tally(i64 p) {
  std::vector<int> t(p, 0);
  for (i64 y = 0; y < p; ++y) ++t[y * y % p];
  return t;
}

inline int legendre(i64 a, i64 p) {
  a = md(a, p);
  if (a == 0) return 0;
  for (i64 y = 1; y < p; ++y)
    if (y * y % p == a) return 1;
  return -1;
}

inline i64 inverse(i64 a, i64 p) {
  a = md(a, p);
  for (i64 x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

// Points on the smooth model of y^2 = alpha prod (x - r) over F_p: affine
// pairs plus the points over infinity (1 for odd degree, the number of
// square roots of alpha for even degree).
inline i64 count_fp(i64 p, i64 alpha, const std::vector<i64>& roots) {
  const auto tally = square_tally(p);
  i64 n = 0;
  for (i64 x = 0; x < p; ++x) {
    i64 v = md(alpha, p);
    for (i64 r : roots) v = v * md(x - r, p) % p;
    n += tally[v];
  }
  return n + (roots.size() % 2 == 1 ? 1 : tally[md(alpha, p)]);
}

// F_{p^2} as pairs u + v w with w^2 = nr for the least non-residue nr.
struct Fp2 {
  i64 p;
  i64 nr;

  explicit Fp2(i64 prime) : p(prime), nr(2) {
    while (legendre(nr, p) != -1) ++nr;
  }
  i64 size() const { return p * p; }
  i64 enc(i64 u, i64 v) const { return md(u, p) + p * md(v, p); }
  i64 mul(i64 x, i64 y) const {
    const i64 u1 = x % p, v1 = x / p, u2 = y % p, v2 = y / p;
    return enc(u1 * u2 + nr * (v1 * v2 % p), u1 * v2 + u2 * v1);
  }
  i64 sub_base(i64 x, i64 c) const { return enc(x % p - c, x / p); }
};

inline i64 count_fp2(i64 p, i64 alpha, const std::vector<i64>& roots) {
  const Fp2 f(p);
  std::vector<int> tally(f.size(), 0);
  for (i64 y = 0; y < f.size(); ++y) ++tally[f.mul(y, y)];
  i64 n = 0;
  for (i64 x = 0; x < f.size(); ++x) {
    i64 v = md(alpha, p);
    for (i64 r : roots) v = f.mul(v, f.sub_base(x, r));
    n += tally[v];
  }
  return n + (roots.size() % 2 == 1 ? 1 : tally[md(alpha, p)]);
}

inline i64 count_legendre(i64 p, i64 theta, i64 lambda, int j) {
  const std::vector<i64> roots{0, 1, lambda};
  return j == 1 ? count_fp(p, theta, roots) : count_fp2(p, theta, roots);
}

// (x2 - x4)(x1 - y)(x3 - x5) = (x2 - y)(x1 - x5)(x3 - x4), solved by trying
// every y.
inline std::optional<i64> sixth_root(i64 p, i64 x1, i64 x2, i64 x3, i64 x4, i64 x5) {
  std::optional<i64> found;
  for (i64 y = 0; y < p; ++y) {
    if (md((x2 - x4) * (x1 - y) % p * (x3 - x5), p) ==
        md((x2 - y) * (x1 - x5) % p * (x3 - x4), p)) {
      if (found) return std::nullopt;  // identity in y
      found = y;
    }
  }
  return found;
}

// Row layout p, alpha1, alpha2, a1..a6, b5, b6 with both cross-ratio
// equalities holding and all eight roots distinct; no squareness filter.
inline std::optional<std::array<i64, 11>> random_cross_ratio_row(i64 p, std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> any(0, p - 1), nonzero(1, p - 1);
  std::array<i64, 6> r{};
  for (auto& v : r) v = any(rng);
  const auto a6 = sixth_root(p, r[0], r[1], r[2], r[3], r[4]);
  const auto b6 = sixth_root(p, r[0], r[1], r[2], r[3], r[5]);
  if (!a6 || !b6) return std::nullopt;
  const std::array<i64, 8> all{r[0], r[1], r[2], r[3], r[4], *a6, r[5], *b6};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (all[i] == all[j]) return std::nullopt;
  return std::array<i64, 11>{p, nonzero(rng), nonzero(rng), r[0], r[1], r[2], r[3],
                             r[4], *a6, r[5], *b6};
}

}  // namespace oracle

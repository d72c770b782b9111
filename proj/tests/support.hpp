#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "circlesep/geom.hpp"

namespace circlesep::testing {

inline PlanarPoint pp(long un, long ud, long vn, long vd) { return {make_rational(un, ud), make_rational(vn, vd)}; }
inline PlanarPoint pp(long u, long v) { return pp(u, 1, v, 1); }

/// Five dots laid out like the incident-circle illustration (coordinates x100).
inline DotConfig five_dot_example() {
  return DotConfig::from_planar(
      {pp(0, 1, 80, 100), pp(0, 1, -180, 100), pp(147, 100, 82, 100), pp(-127, 100, -27, 100), pp(73, 100, -80, 100)});
}

/// Center dot inside a triangle: one incident circle has an interior dot.
inline DotConfig center_and_triangle() {
  return DotConfig::from_planar({pp(0, 0), pp(0, 1), pp(7, 8, -1, 2), pp(-7, 8, -1, 2)});
}

/// Rhombus-like four dots: two incident circles have an interior dot.
inline DotConfig two_interior_circles() {
  return DotConfig::from_planar({pp(1, 2, 0, 1), pp(-1, 2, 0, 1), pp(0, 1, 7, 8), pp(0, 1, -7, 8)});
}

/// Random rational planar point with numerators in [-num, num], denominators in [1, den].
inline PlanarPoint random_planar(std::mt19937_64& rng, long num = 64, long den = 64) {
  auto draw = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  return {make_rational(draw(-num, num), draw(1, den)), make_rational(draw(-num, num), draw(1, den))};
}

// Closed forms restated independently of the library.
inline std::int64_t I(int k, int n) { return (k < 0 || k > n - 3) ? 0 : 2LL * (k + 1) * (n - k - 2); }
inline std::int64_t side_count_closed_form(int k, int l) { return k == l ? (k + 1LL) * (k + 1) : 2LL * (k + 1) * (l + 1); }
inline std::int64_t avoidant_closed_form(int k, int l) { return k == l ? 1LL * k * k - k + 1 : 2LL * k * l - k - l + 2; }

inline std::int64_t binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

}  // namespace circlesep::testing

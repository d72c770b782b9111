#include <set>

#include "circlesep/circles.hpp"
#include "circlesep/error.hpp"
#include "circlesep/separability_oracle.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace circlesep;
using namespace circlesep::testing;

TEST_CASE("enumerate_incident") {
  CHECK(enumerate_incident(random_config(3, 1)).size() == 1);
  CHECK(enumerate_incident(random_config(3, 1))[0].left_count == 0);
  CHECK(enumerate_incident(random_config(4, 1)).size() == 4);

  const auto records = enumerate_incident(five_dot_example());
  int one_one = 0;
  for (const auto& r : records) {
    CHECK(r.left_count + r.right_count == 2);
    one_one += r.left_count == 1;
  }
  CHECK(one_one == 4);

  const auto cocircular = DotConfig::from_planar({pp(0, 0), pp(1, 0), pp(0, 1), pp(1, 1), pp(5, 7)});
  try {
    enumerate_incident(cocircular);
    FAIL("expected NotGeneralPosition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotGeneralPosition);
  }
}

TEST_CASE("incident_histogram matches the closed form") {
  CHECK(incident_histogram(five_dot_example()).at({1, 1}) == 4);
  CHECK(incident_histogram(five_dot_example()).at({0, 2}) == 6);
  CHECK(incident_histogram(random_config(7, 2)).at({2, 2}) == 9);
  for (int n = 3; n <= 9; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto hist = incident_histogram(random_config(n, seed));
      std::int64_t total = 0;
      for (int k = 0; 2 * k <= n - 3; ++k) {
        const int l = n - 3 - k;
        const auto it = hist.find({k, l});
        REQUIRE(it != hist.end());
        CHECK(it->second == side_count_closed_form(k, l));
        total += it->second;
      }
      CHECK(total == binom(n, 3));
    }
  }
}

TEST_CASE("count_oriented_incident") {
  CHECK(count_oriented_incident(random_config(4, 3), 0) == 4);
  CHECK(count_oriented_incident(random_config(6, 3), 0) == 8);
  CHECK(count_oriented_incident(random_config(6, 3), 1) == 12);
  CHECK_THROWS_AS(count_oriented_incident(random_config(6, 3), 4), Error);
  CHECK_THROWS_AS(count_oriented_incident(random_config(6, 3), -1), Error);
  for (int n = 3; n <= 9; ++n) {
    const auto c = random_config(n, 17);
    std::int64_t sum = 0;
    for (int k = 0; k <= n - 3; ++k) {
      CHECK(count_oriented_incident(c, k) == I(k, n));
      sum += count_oriented_incident(c, k);
    }
    CHECK(sum == 2 * binom(n, 3));
  }
}

TEST_CASE("hull_face_count") {
  CHECK(hull_face_count(random_config(4, 9)) == 4);
  CHECK(hull_face_count(random_config(6, 9)) == 8);
  CHECK(hull_face_count(random_config(10, 9)) == 16);
  CHECK_THROWS_AS(hull_face_count(random_config(3, 9)), Error);
}

TEST_CASE("enumerate_separable") {
  SUBCASE("k = 1 gives singletons") {
    const auto s = enumerate_separable(random_config(7, 1), 1);
    REQUIRE(s.size() == 7);
    for (int i = 0; i < 7; ++i) CHECK(s[i] == bit(i));
  }
  SUBCASE("six dots, three on each side") {
    const auto c = random_config(6, 4);
    CHECK(enumerate_separable(c, 3).size() == 14);
    CHECK(avoidant_partition_count(c, 3, 3) == 7);
  }
  SUBCASE("count, complement symmetry and range errors") {
    for (int n = 4; n <= 9; ++n) {
      const auto c = random_config(n, 6);
      for (int k = 1; k < n; ++k) {
        const auto s = enumerate_separable(c, k);
        CHECK(static_cast<std::int64_t>(s.size()) == 2LL * n * k - 2LL * k * k - n + 2);
        const auto comp = enumerate_separable(c, n - k);
        const std::set<DotSet> comp_set(comp.begin(), comp.end());
        for (DotSet x : s) CHECK(comp_set.count(full_set(n) & ~x) == 1);
      }
      CHECK_THROWS_AS(enumerate_separable(c, 0), Error);
      CHECK_THROWS_AS(enumerate_separable(c, n), Error);
    }
  }
}

TEST_CASE("avoidant_partition_count") {
  CHECK(avoidant_partition_count(random_config(4, 8), 1, 3) == 4);
  CHECK(avoidant_partition_count(random_config(4, 8), 2, 2) == 3);
  CHECK(avoidant_partition_count(random_config(6, 8), 3, 3) == 7);
  try {
    avoidant_partition_count(random_config(6, 8), 2, 3);
    FAIL("expected SizeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("strict feasibility by Fourier-Motzkin") {
  auto row = [](long a, long b, long c, long d) {
    return StrictRow{Rational(a), Rational(b), Rational(c), Rational(d)};
  };
  CHECK(strictly_feasible({row(1, 0, 0, 0)}));
  CHECK_FALSE(strictly_feasible({row(1, 0, 0, 0), row(-1, 0, 0, 0)}));
  CHECK_FALSE(strictly_feasible({row(0, 0, 0, 0)}));
  // y0 > 0, y1 > 0, -y0 - y1 > 0 is infeasible; dropping one row makes it feasible.
  CHECK_FALSE(strictly_feasible({row(1, 0, 0, 0), row(0, 1, 0, 0), row(-1, -1, 0, 0)}));
  CHECK(strictly_feasible({row(1, 0, 0, 0), row(-1, -1, 0, 0)}));
  CHECK(strictly_feasible({row(1, 2, 3, 4), row(-1, 5, 0, 1), row(0, -1, 1, 1), row(2, 2, -7, 1)}));
}

TEST_CASE("oracle_separable") {
  const auto c = random_config(7, 2);
  for (int i = 0; i < 7; ++i) CHECK(oracle_separable(c, bit(i)));
  CHECK_THROWS_AS(oracle_separable(c, 0), Error);
  CHECK_THROWS_AS(oracle_separable(c, full_set(7)), Error);

  SUBCASE("linked four dots: both splits along the two circles separate") {
    const auto linked = two_interior_circles();
    // Circles through {2,3,4} and {1,3,4} (1-based) each hold one dot inside;
    // perturbing them splits {1,2} from {3,4} and {1,3}/{1,4} variants.
    CHECK(oracle_separable(linked, bit(0) | bit(1)));
    CHECK(oracle_separable(linked, bit(2) | bit(3)));
    int separable_pairs = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) separable_pairs += oracle_separable(linked, bit(a) | bit(b));
    CHECK(separable_pairs == 6);
  }

  SUBCASE("agrees with the sweep") {
    for (int n = 4; n <= 8; ++n) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto cfg = random_config(n, 100 + seed);
        for (int k = 1; k < n; ++k) {
          const auto sweep = enumerate_separable(cfg, k);
          const std::set<DotSet> sweep_set(sweep.begin(), sweep.end());
          for (DotSet s = 1; s < full_set(n); ++s) {
            if (popcount(s) != k) continue;
            REQUIRE(oracle_separable(cfg, s) == (sweep_set.count(s) == 1));
          }
        }
      }
    }
  }
}

TEST_CASE("planar_interior_histogram") {
  const auto a = planar_interior_histogram(center_and_triangle());
  CHECK(a.at(1) == 1);
  CHECK(a.at(0) == 3);
  const auto b = planar_interior_histogram(two_interior_circles());
  CHECK(b.at(1) == 2);
  CHECK(b.at(0) == 2);
  // Same unoriented side counts for both.
  CHECK(incident_histogram(center_and_triangle()) == incident_histogram(two_interior_circles()));

  const auto r = planar_interior_histogram(random_config(8, 3));
  std::int64_t total = 0;
  for (const auto& [count, value] : r) total += value;
  CHECK(total == binom(8, 3));
}

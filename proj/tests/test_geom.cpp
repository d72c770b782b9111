#include <random>

#include "circlesep/error.hpp"
#include "circlesep/geom.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace circlesep;
using circlesep::testing::pp;
using circlesep::testing::random_planar;

TEST_CASE("rational parsing is strict about canonical form") {
  CHECK(parse_rational("3/7") == make_rational(3, 7));
  CHECK(parse_rational("-1/2") == make_rational(-1, 2));
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("-12") == -12);
  for (const char* bad : {"2/4", "1/0", "0/5", "+1", "01", "1/-2", "-0", "", "1/", "/2", "1/1", "1.5", "a"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  CHECK(format_rational(make_rational(-6, 4)) == "-3/2");
  CHECK(format_rational(make_rational(8, 4)) == "2");
}

TEST_CASE("lift examples") {
  CHECK(lift(pp(0, 0)) == SpherePoint(0, 0, -1));
  CHECK(lift(pp(1, 0)) == SpherePoint(1, 0, 0));
  // u^2 + v^2 = 1/2, so (2u, 2v, -1/2) / (3/2).
  CHECK(lift(pp(1, 2, 1, 2)) == SpherePoint(make_rational(2, 3), make_rational(2, 3), make_rational(-1, 3)));
}

TEST_CASE("project inverts lift and rejects the pole") {
  CHECK(project(SpherePoint(0, 0, -1)) == pp(0, 0));
  CHECK(project(SpherePoint(1, 0, 0)) == pp(1, 0));
  try {
    project(pole());
    FAIL("expected PoleProjection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PoleProjection);
  }

  std::mt19937_64 rng(1);
  for (int i = 0; i < 10000; ++i) {
    const PlanarPoint q = random_planar(rng, 1000, 1000);
    const SpherePoint s = lift(q);
    REQUIRE_FALSE(s.is_pole());
    REQUIRE(project(s) == q);
    REQUIRE(lift(project(s)) == s);
  }
}

TEST_CASE("orient") {
  const auto a = lift(pp(0, 0)), b = lift(pp(1, 0)), c = lift(pp(0, 1)), d = lift(pp(2, 2));
  // Cofactor expansion of det[b-a, c-a, d-a] gives 8/9.
  CHECK(orient(a, b, c, d) == Sign::Positive);
  // (1, 1) is on the planar circle through (0,0), (1,0), (0,1).
  CHECK(orient(a, b, c, lift(pp(1, 1))) == Sign::Zero);
  // Collinear planar points lift to a circle through the pole.
  CHECK(orient(a, b, lift(pp(5, 0)), lift(pp(-3, 0))) == Sign::Zero);

  SUBCASE("alternating under every transposition") {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 500; ++it) {
      std::array<SpherePoint, 4> p{lift(random_planar(rng)), lift(random_planar(rng)), lift(random_planar(rng)),
                                   lift(random_planar(rng))};
      const Sign s = orient(p[0], p[1], p[2], p[3]);
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          auto q = p;
          std::swap(q[i], q[j]);
          REQUIRE(orient(q[0], q[1], q[2], q[3]) == -s);
        }
    }
  }

  SUBCASE("spherical cocircularity matches the planar in-circle test") {
    auto incircle = [](const std::array<PlanarPoint, 4>& q) {
      // det of rows (u, v, u^2 + v^2, 1), expanded along the last column.
      std::array<std::array<Rational, 3>, 4> r;
      for (int i = 0; i < 4; ++i) r[i] = {q[i].u, q[i].v, q[i].u * q[i].u + q[i].v * q[i].v};
      auto det3 = [&](int x, int y, int z) {
        const auto &A = r[x], &B = r[y], &C = r[z];
        return Rational(A[0] * (B[1] * C[2] - B[2] * C[1]) - A[1] * (B[0] * C[2] - B[2] * C[0]) +
                        A[2] * (B[0] * C[1] - B[1] * C[0]));
      };
      return Rational(-det3(1, 2, 3) + det3(0, 2, 3) - det3(0, 1, 3) + det3(0, 1, 2));
    };
    std::mt19937_64 rng(3);
    int zeros = 0;
    for (int it = 0; it < 2000; ++it) {
      // Small coordinates so that cocircular and collinear quadruples occur.
      std::array<PlanarPoint, 4> q{random_planar(rng, 3, 1), random_planar(rng, 3, 1), random_planar(rng, 3, 1),
                                   random_planar(rng, 3, 1)};
      const Sign s = orient(lift(q[0]), lift(q[1]), lift(q[2]), lift(q[3]));
      const int planar = sgn(incircle(q));
      REQUIRE((s == Sign::Zero) == (planar == 0));
      REQUIRE(static_cast<int>(s) == -planar);
      zeros += planar == 0;
    }
    CHECK(zeros > 0);
  }
}

TEST_CASE("side_of_circle") {
  const auto config = DotConfig::from_planar({pp(0, 0), pp(1, 0), pp(0, 1), pp(1, 1), pp(2, 2)});
  CHECK(side_of_circle(config, {0, 1, 2}, 3) == Side::On);
  CHECK(side_of_circle(config, {0, 1, 2}, 4) == Side::Left);
  CHECK(side_of_circle(config, {0, 2, 1}, 4) == Side::Right);

  const auto random = random_config(9, 5);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      for (int k = 0; k < 9; ++k) {
        if (i == j || j == k || i == k) continue;
        for (int d = 0; d < 9; ++d) {
          if (d == i || d == j || d == k) continue;
          const Side s = side_of_circle(random, {i, j, k}, d);
          REQUIRE(s != Side::On);
          REQUIRE(side_of_circle(random, {i, k, j}, d) == (s == Side::Left ? Side::Right : Side::Left));
        }
      }
}

TEST_CASE("nearer and antipode") {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 300; ++it) {
    const auto p = lift(random_planar(rng)), d1 = lift(random_planar(rng)), d2 = lift(random_planar(rng));
    CHECK(nearer(p, d1, d1) == Sign::Zero);
    if (!(p == d2)) CHECK(nearer(p, p, d2) == Sign::Positive);
    const Sign s = nearer(p, d1, d2);
    if (s != Sign::Zero) CHECK(nearer(antipode(p), d1, d2) == -s);
    CHECK(antipode(antipode(p)) == p);
  }
  CHECK(antipode(pole()) == SpherePoint(0, 0, -1));
}

TEST_CASE("general position") {
  SUBCASE("cocircular and collinear planar quadruples are violations") {
    const auto circle = DotConfig::from_planar({pp(0, 0), pp(1, 0), pp(0, 1), pp(1, 1), pp(5, 7)});
    const auto r1 = is_general_position(circle);
    REQUIRE_FALSE(r1.certified());
    CHECK(*r1.violation == Quadruple{0, 1, 2, 3});

    const auto line = DotConfig::from_planar({pp(0, 0), pp(1, 1), pp(2, 2), pp(3, 3)});
    CHECK_FALSE(is_general_position(line).certified());
    CHECK(planar_collinear_triple(line).has_value());
  }
  CHECK(is_general_position(DotConfig::from_planar({pp(0, 0), pp(1, 0), pp(0, 1)})).certified());

  SUBCASE("generated configurations are certified and deterministic") {
    for (int n = 1; n <= 12; ++n) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto c = random_config(n, seed);
        REQUIRE(c.size() == n);
        REQUIRE(is_general_position(c).certified());
        REQUIRE_FALSE(planar_collinear_triple(c).has_value());
        for (const auto& p : c.planar()) {
          REQUIRE(abs(p.u.get_num()) <= 64);
          REQUIRE(p.u.get_den() <= 64);
        }
        REQUIRE(random_config(n, seed).planar() == c.planar());
      }
    }
    CHECK_THROWS_AS(random_config(65, 1), Error);
  }

  SUBCASE("duplicates and the pole are rejected") {
    CHECK_THROWS_AS(DotConfig::from_planar({pp(1, 1), pp(1, 1)}), Error);
    CHECK_THROWS_AS(DotConfig::from_sphere({SpherePoint(1, 0, 0), pole()}), Error);
  }
}

TEST_CASE("circumcenter_numeric") {
  // Equilateral triple on the equator, counterclockwise seen from the north.
  const auto c = DotConfig::from_sphere({SpherePoint(1, 0, 0), SpherePoint(0, 1, 0), SpherePoint(-1, 0, 0)});
  const auto n = circumcenter_numeric(c, {0, 1, 2});
  CHECK(n[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(n[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(n[2] == doctest::Approx(1.0).epsilon(1e-12));
  const auto r = circumcenter_numeric(c, {0, 2, 1});
  CHECK(r[2] == doctest::Approx(-1.0).epsilon(1e-12));

  const auto random = random_config(8, 11);
  for (int i = 0; i < 6; ++i) {
    const auto v = circumcenter_numeric(random, {i, i + 1, i + 2});
    const auto w = circumcenter_numeric(random, {i, i + 2, i + 1});
    CHECK(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] == doctest::Approx(1.0).epsilon(1e-12));
    for (int c2 = 0; c2 < 3; ++c2) CHECK(w[c2] == doctest::Approx(-v[c2]));
  }
}

TEST_CASE("exact rotations keep dots on the sphere") {
  const auto rot = rotation_from_quaternion(1, 2, 3, 4);
  const auto c = random_config(7, 3);
  const auto r = rotate(c, rot);
  CHECK(r.size() == 7);
  CHECK(is_general_position(r).certified());
  for (int i = 0; i < 7; ++i) CHECK(dot(r.dot(i), r.dot(i)) == 1);
}

#include "circlesep/geom.hpp"

#include <cmath>
#include <random>
#include <string>

#include "circlesep/error.hpp"

namespace circlesep {

namespace {

struct Vec3 {
  Rational x, y, z;
};

Vec3 diff(const SpherePoint& a, const SpherePoint& b) {
  return {a.x() - b.x(), a.y() - b.y(), a.z() - b.z()};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

void check_distinct(const std::vector<SpherePoint>& dots) {
  if (dots.size() > static_cast<std::size_t>(kMaxDots)) {
    throw Error(ErrorCode::UnsupportedSize,
                std::to_string(dots.size()) + " dots; at most " + std::to_string(kMaxDots) + " supported");
  }
  for (std::size_t i = 0; i < dots.size(); ++i) {
    if (dots[i].is_pole()) throw Error(ErrorCode::PoleProjection, "dot " + std::to_string(i + 1) + " is the pole");
    for (std::size_t j = 0; j < i; ++j) {
      if (dots[i] == dots[j]) {
        throw Error(ErrorCode::NotGeneralPosition,
                    "dots " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
      }
    }
  }
}

// Portable bounded draw (std::uniform_int_distribution is implementation-defined).
long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

}  // namespace

SpherePoint::SpherePoint(Rational x, Rational y, Rational z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (x_ * x_ + y_ * y_ + z_ * z_ != 1) {
    throw Error(ErrorCode::InternalInconsistency, "point is not on the unit sphere");
  }
}

bool SpherePoint::is_pole() const { return x_ == 0 && y_ == 0 && z_ == 1; }

SpherePoint pole() { return SpherePoint(0, 0, 1); }

SpherePoint lift(const PlanarPoint& p) {
  const Rational r2 = p.u * p.u + p.v * p.v;
  const Rational w = 1 + r2;
  return SpherePoint(Rational(2 * p.u / w), Rational(2 * p.v / w), Rational((r2 - 1) / w));
}

PlanarPoint project(const SpherePoint& p) {
  if (p.is_pole()) throw Error(ErrorCode::PoleProjection, "cannot project the pole");
  const Rational s = 1 - p.z();
  return {Rational(p.x() / s), Rational(p.y() / s)};
}

SpherePoint antipode(const SpherePoint& p) {
  return SpherePoint(Rational(-p.x()), Rational(-p.y()), Rational(-p.z()));
}

Rational dot(const SpherePoint& a, const SpherePoint& b) { return a.x() * b.x() + a.y() * b.y() + a.z() * b.z(); }

Sign orient(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c, const SpherePoint& d) {
  return to_sign(sgn(dot(cross(diff(b, a), diff(c, a)), diff(d, a))));
}

Sign nearer(const SpherePoint& p, const SpherePoint& d1, const SpherePoint& d2) {
  return to_sign(sgn(dot(p, d1) - dot(p, d2)));
}

DotConfig::DotConfig(std::vector<SpherePoint> dots, std::vector<PlanarPoint> planar)
    : dots_(std::move(dots)), planar_(std::move(planar)) {}

DotConfig DotConfig::from_planar(std::vector<PlanarPoint> planar) {
  std::vector<SpherePoint> dots;
  dots.reserve(planar.size());
  for (const auto& p : planar) dots.push_back(lift(p));
  check_distinct(dots);
  return DotConfig(std::move(dots), std::move(planar));
}

DotConfig DotConfig::from_sphere(std::vector<SpherePoint> dots) {
  check_distinct(dots);
  std::vector<PlanarPoint> planar;
  planar.reserve(dots.size());
  for (const auto& d : dots) planar.push_back(project(d));
  return DotConfig(std::move(dots), std::move(planar));
}

DotConfig DotConfig::without(int i) const {
  auto dots = dots_;
  auto planar = planar_;
  dots.erase(dots.begin() + i);
  planar.erase(planar.begin() + i);
  return DotConfig(std::move(dots), std::move(planar));
}

Side side_of_circle(const DotConfig& config, const Triple& oriented, int d) {
  switch (orient(config.dot(oriented[0]), config.dot(oriented[1]), config.dot(oriented[2]), config.dot(d))) {
    case Sign::Positive: return Side::Left;
    case Sign::Negative: return Side::Right;
    case Sign::Zero: break;
  }
  return Side::On;
}

GeneralPositionReport is_general_position(const DotConfig& config) {
  const int n = config.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vec3 normal = cross(diff(config.dot(j), config.dot(i)), diff(config.dot(k), config.dot(i)));
        for (int l = k + 1; l < n; ++l) {
          if (sgn(dot(normal, diff(config.dot(l), config.dot(i)))) == 0) return {Quadruple{i, j, k, l}};
        }
      }
  return {};
}

std::optional<Triple> planar_collinear_triple(const DotConfig& config) {
  const int n = config.size();
  const SpherePoint p_inf = pole();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient(config.dot(i), config.dot(j), config.dot(k), p_inf) == Sign::Zero) return Triple{i, j, k};
  return std::nullopt;
}

std::array<double, 3> circumcenter_numeric(const DotConfig& config, const Triple& oriented) {
  const auto& a = config.dot(oriented[0]);
  const Vec3 n = cross(diff(config.dot(oriented[1]), a), diff(config.dot(oriented[2]), a));
  const std::array<double, 3> v{n.x.get_d(), n.y.get_d(), n.z.get_d()};
  const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  return {v[0] / len, v[1] / len, v[2] / len};
}

DotConfig random_config(int n, std::uint64_t seed) {
  if (n > kMaxDots) {
    throw Error(ErrorCode::UnsupportedSize, std::to_string(n) + " dots; at most " + std::to_string(kMaxDots));
  }
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
  const SpherePoint p_inf = pole();
  std::vector<PlanarPoint> planar;
  std::vector<SpherePoint> dots;
  while (static_cast<int>(dots.size()) < n) {
    PlanarPoint cand{make_rational(draw(rng, -64, 64), draw(rng, 1, 64)),
                     make_rational(draw(rng, -64, 64), draw(rng, 1, 64))};
    const SpherePoint s = lift(cand);
    const int m = static_cast<int>(dots.size());
    bool ok = true;
    for (int i = 0; ok && i < m; ++i) {
      if (dots[i] == s) ok = false;
      for (int j = i + 1; ok && j < m; ++j) {
        if (orient(dots[i], dots[j], s, p_inf) == Sign::Zero) ok = false;
        for (int k = j + 1; ok && k < m; ++k) {
          if (orient(dots[i], dots[j], dots[k], s) == Sign::Zero) ok = false;
        }
      }
    }
    if (!ok) continue;
    planar.push_back(std::move(cand));
    dots.push_back(s);
  }
  return DotConfig::from_planar(std::move(planar));
}

SpherePoint Rotation::apply(const SpherePoint& p) const {
  const std::array<const Rational*, 3> v{&p.x(), &p.y(), &p.z()};
  std::array<Rational, 3> out;
  for (int r = 0; r < 3; ++r) out[r] = m[r][0] * *v[0] + m[r][1] * *v[1] + m[r][2] * *v[2];
  return SpherePoint(out[0], out[1], out[2]);
}

Rotation rotation_from_quaternion(long a, long b, long c, long d) {
  const long s = a * a + b * b + c * c + d * d;
  if (s == 0) throw Error(ErrorCode::InternalInconsistency, "zero quaternion");
  auto q = [s](long num) { return make_rational(num, s); };
  Rotation r;
  r.m = {{{q(a * a + b * b - c * c - d * d), q(2 * (b * c - a * d)), q(2 * (b * d + a * c))},
          {q(2 * (b * c + a * d)), q(a * a - b * b + c * c - d * d), q(2 * (c * d - a * b))},
          {q(2 * (b * d - a * c)), q(2 * (c * d + a * b)), q(a * a - b * b - c * c + d * d)}}};
  return r;
}

DotConfig rotate(const DotConfig& config, const Rotation& rotation) {
  std::vector<SpherePoint> dots;
  dots.reserve(config.size());
  for (const auto& d : config.dots()) dots.push_back(rotation.apply(d));
  return DotConfig::from_sphere(std::move(dots));
}

}  // namespace circlesep

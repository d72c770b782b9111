#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "circlesep/rational.hpp"

namespace circlesep {

/// Subset of dot indices. Bit i is dot i (0-based).
using DotSet = std::uint64_t;
inline constexpr int kMaxDots = 64;

inline DotSet bit(int i) { return DotSet{1} << i; }
inline int popcount(DotSet s) { return std::popcount(s); }
inline DotSet full_set(int n) { return n >= 64 ? ~DotSet{0} : (DotSet{1} << n) - 1; }
inline bool contains(DotSet s, int i) { return (s >> i) & 1U; }

using Triple = std::array<int, 3>;
using Quadruple = std::array<int, 4>;

inline DotSet to_set(const Triple& t) { return bit(t[0]) | bit(t[1]) | bit(t[2]); }

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign to_sign(int s) { return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero); }
inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

enum class Side { Left, Right, On };

struct PlanarPoint {
  Rational u;
  Rational v;

  friend bool operator==(const PlanarPoint& a, const PlanarPoint& b) { return a.u == b.u && a.v == b.v; }
};

/// Exact rational point on the unit sphere.
class SpherePoint {
 public:
  /// Throws Error(InternalInconsistency) unless x^2 + y^2 + z^2 == 1.
  SpherePoint(Rational x, Rational y, Rational z);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }

  bool is_pole() const;

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_;
  }

 private:
  Rational x_, y_, z_;
};

/// The projection pole p_inf = (0, 0, 1).
SpherePoint pole();

SpherePoint lift(const PlanarPoint& p);
/// Throws Error(PoleProjection) for the pole.
PlanarPoint project(const SpherePoint& p);
SpherePoint antipode(const SpherePoint& p);

Rational dot(const SpherePoint& a, const SpherePoint& b);

/// sign det[b-a, c-a, d-a]; Zero iff the four points are cocircular on the sphere.
Sign orient(const SpherePoint& a, const SpherePoint& b, const SpherePoint& c, const SpherePoint& d);

/// Positive iff p is strictly closer to d1 than to d2.
Sign nearer(const SpherePoint& p, const SpherePoint& d1, const SpherePoint& d2);

/// Labeled dots on the sphere together with their planar chart coordinates.
class DotConfig {
 public:
  /// Lifts planar dots. Throws on duplicates or more than kMaxDots dots.
  static DotConfig from_planar(std::vector<PlanarPoint> planar);
  /// Throws on duplicates, the pole, or more than kMaxDots dots.
  static DotConfig from_sphere(std::vector<SpherePoint> dots);

  int size() const { return static_cast<int>(dots_.size()); }
  const SpherePoint& dot(int i) const { return dots_[i]; }
  const std::vector<SpherePoint>& dots() const { return dots_; }
  const std::vector<PlanarPoint>& planar() const { return planar_; }

  /// Configuration with dot `i` removed (later indices shift down by one).
  DotConfig without(int i) const;

 private:
  DotConfig(std::vector<SpherePoint> dots, std::vector<PlanarPoint> planar);

  std::vector<SpherePoint> dots_;
  std::vector<PlanarPoint> planar_;
};

/// Side of dot `d` relative to the circle through (i, j, k) oriented in that order.
Side side_of_circle(const DotConfig& config, const Triple& oriented, int d);

struct GeneralPositionReport {
  std::optional<Quadruple> violation;

  bool certified() const { return !violation.has_value(); }
};

/// Checks all quadruples in lexicographic order; reports the first cocircular one.
GeneralPositionReport is_general_position(const DotConfig& config);

/// First triple whose circle passes through the pole, i.e. whose planar images
/// are collinear. Such circles have no planar interior.
std::optional<Triple> planar_collinear_triple(const DotConfig& config);

/// Unit normal of the plane through the oriented triple, pointing to its left
/// side. Floating point, for layout only.
std::array<double, 3> circumcenter_numeric(const DotConfig& config, const Triple& oriented);

/// Seeded configuration with numerators in [-64, 64] and denominators in
/// [1, 64], resampled dot by dot until the sphere configuration is in general
/// position and no planar triple is collinear. Throws Error(UnsupportedSize)
/// for n > kMaxDots.
DotConfig random_config(int n, std::uint64_t seed);

/// Exact rotation built from an integer quaternion (a, b, c, d) != 0.
struct Rotation {
  std::array<std::array<Rational, 3>, 3> m;

  SpherePoint apply(const SpherePoint& p) const;
};

Rotation rotation_from_quaternion(long a, long b, long c, long d);

/// Throws Error(PoleProjection) if the rotation carries a dot onto the pole.
DotConfig rotate(const DotConfig& config, const Rotation& rotation);

}  // namespace circlesep

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "circlesep/geom.hpp"
#include "circlesep/polynomial.hpp"
#include "circlesep/voronoi.hpp"

namespace circlesep {

/// Linear motion of every dot in the planar chart, lifted pointwise:
/// d_i(t) = lift((1-t) start_i + t end_i), t in [0, 1].
struct Family {
  std::vector<PlanarPoint> start;
  std::vector<PlanarPoint> end;
  /// All quadruples in lexicographic order, with walls[q] carrying the sign of
  /// orient on quadruples[q] for every t.
  std::vector<Quadruple> quadruples;
  std::vector<Polynomial> walls;

  int size() const { return static_cast<int>(start.size()); }
};

/// Orientation polynomial of four linearly moving planar points: its sign at t
/// equals orient of the four lifted points at t. Degree at most 4.
Polynomial wall_polynomial(const std::array<PlanarPoint, 4>& start, const std::array<PlanarPoint, 4>& end);

/// Throws SizeMismatch, NotGeneralPosition for uncertified endpoints, and
/// IdenticallyDegeneratePath if some wall polynomial vanishes identically.
Family make_family(const DotConfig& a, const DotConfig& b);

PlanarPoint position_at(const Family& family, int dot, const Rational& t);
DotConfig config_at(const Family& family, const Rational& t);

/// A cocircularity of one quadruple at a single time inside (lo, hi). No other
/// wall polynomial vanishes on [lo, hi].
struct WallEvent {
  Quadruple quadruple;
  Rational lo;
  Rational hi;
  /// The wall polynomial changes sign across the interval. Even-multiplicity
  /// touches are reported with transversal = false.
  bool transversal = true;
  int sign_before = 0;
};

/// All walls crossed for t in (0, 1), sorted by time. Throws
/// Error(NotSemigeneral) when two quadruples are cocircular at the same time.
std::vector<WallEvent> detect_walls(const Family& family);

enum class MoveKind { SquareMove, WhiteReconnect, BlackReconnect, NoOp };

const char* to_string(MoveKind kind);

/// What happened near one of the two centers of the crossing circle.
struct CenterMove {
  MoveKind kind = MoveKind::NoOp;
  /// Dots outside the quadruple on the left side of the crossing circle, as
  /// oriented for this center.
  int near_count = 0;
  std::vector<VertexKey> before;
  std::vector<VertexKey> after;
};

struct MoveEvent {
  WallEvent wall;
  MoveKind kind = MoveKind::NoOp;
  std::vector<VertexKey> affected_before;
  std::vector<VertexKey> affected_after;
  bool antipodal_paired = false;
  std::optional<MoveKind> second_kind;
  std::array<CenterMove, 2> centers;
  StrataCounts counts_before;
  StrataCounts counts_after;
  /// Index of the linear segment this event belongs to (retry paths have several).
  int segment = 0;
};

/// Compares the order-k graphs at the two ends of the event interval and
/// classifies the change at each center. The interval may be narrowed; the
/// returned event carries the one actually used. Throws TangentialTouch for a
/// non-transversal event and NonLocalChange if anything outside the quadruple
/// changes.
MoveEvent classify_move(const Family& family, const WallEvent& event, int k);

struct MoveLog {
  std::vector<MoveEvent> events;
  std::vector<WallEvent> tangential;
  /// Planar chart configurations the path passes through, first and last
  /// being the endpoints.
  std::vector<std::vector<PlanarPoint>> waypoints;
  bool endpoints_match = false;
  int retries = 0;
};

/// Straight-line family from a to b, classified event by event. Propagates
/// Error(NotSemigeneral).
MoveLog move_sequence(const DotConfig& a, const DotConfig& b, int k);

/// As move_sequence, but a non-semigeneral segment is split at its midpoint
/// jittered by +-1/1024 per coordinate (seeded), up to max_retries times.
/// Throws Error(RetriesExhausted) beyond that.
MoveLog move_sequence_with_retry(const DotConfig& a, const DotConfig& b, int k, int max_retries,
                                 std::uint64_t seed);

}  // namespace circlesep

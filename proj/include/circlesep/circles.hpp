#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "circlesep/geom.hpp"
#include "circlesep/side_table.hpp"

namespace circlesep {

/// An incident circle with its side counts for the canonical orientation.
struct IncidentRecord {
  Triple triple;
  int left_count = 0;
  int right_count = 0;
};

/// Keyed by the unordered pair {k, l} stored as (min, max).
using SideHistogram = std::map<std::pair<int, int>, std::int64_t>;

std::vector<IncidentRecord> enumerate_incident(const SideTable& table);
std::vector<IncidentRecord> enumerate_incident(const DotConfig& config);

SideHistogram incident_histogram(const SideTable& table);
SideHistogram incident_histogram(const DotConfig& config);

/// Oriented incident circles with exactly k dots on their left side.
std::int64_t count_oriented_incident(const SideTable& table, int k);
std::int64_t count_oriented_incident(const DotConfig& config, int k);

/// Incident circles with an empty side (faces of the convex hull of the dots).
std::int64_t hull_face_count(const SideTable& table);
std::int64_t hull_face_count(const DotConfig& config);

/// All k-subsets realizable as the left side of an avoidant circle, sorted.
///
/// Every such subset is L ∪ U or R ∪ U for some incident triple T with strict
/// sides L, R and some U ⊆ T: a small tilt of the plane through T puts each
/// dot of T on whichever side is wanted. Conversely the closed set of planes
/// separating S from its complement has a boundary plane through exactly three
/// dots when the configuration is in general position.
std::vector<DotSet> enumerate_separable(const SideTable& table, int k);
std::vector<DotSet> enumerate_separable(const DotConfig& config, int k);

/// Partitions into parts of sizes k and l (k + l = n) separable by a circle.
std::int64_t avoidant_partition_count(const SideTable& table, int k, int l);
std::int64_t avoidant_partition_count(const DotConfig& config, int k, int l);

/// Histogram of incident circles by the number of dots on the side away from
/// the pole, i.e. inside the planar image circle.
std::map<int, std::int64_t> planar_interior_histogram(const DotConfig& config);

// Closed forms.
std::int64_t incident_formula(int k, int l);
/// I_{k,n} = 2(k+1)(n-k-2); zero outside 0 <= k <= n-3.
std::int64_t oriented_incident_formula(int k, int n);
std::int64_t avoidant_formula(int k, int l);
/// Number of oriented avoidant classes with k dots on the left.
std::int64_t separable_formula(int n, int k);

}  // namespace circlesep

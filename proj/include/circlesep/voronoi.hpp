#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "circlesep/geom.hpp"
#include "circlesep/side_table.hpp"

namespace circlesep {

enum class Color { White, Black };

/// A vertex is the left center of an oriented incident circle. `near` is the
/// set of dots strictly on its left side.
struct VertexKey {
  Triple triple;  // increasing
  bool reversed = false;
  DotSet near = 0;

  auto operator<=>(const VertexKey&) const = default;
};

/// An edge lies on the bisector of `pair`; `near` holds the k-1 dots strictly
/// closer than the pair along it.
struct EdgeKey {
  std::array<int, 2> pair;  // increasing
  DotSet near = 0;

  auto operator<=>(const EdgeKey&) const = default;
};

struct VoronoiVertex {
  VertexKey key;
  Color color;
  std::array<int, 3> edges;  // indices into VoronoiGraph::edges
};

struct VoronoiEdge {
  EdgeKey key;
  std::array<int, 2> vertices;  // indices into VoronoiGraph::vertices
  std::array<int, 2> regions;   // indices into VoronoiGraph::regions (near+pair[0], near+pair[1])
};

/// k-th order Voronoi decomposition of the sphere as a bicolored 3-regular
/// graph. All three lists are sorted by key.
struct VoronoiGraph {
  int n = 0;
  int k = 0;
  std::vector<VoronoiVertex> vertices;
  std::vector<VoronoiEdge> edges;
  std::vector<DotSet> regions;
};

struct StrataCounts {
  std::int64_t whites = 0;
  std::int64_t blacks = 0;
  std::int64_t edges = 0;
  std::int64_t regions = 0;

  friend bool operator==(const StrataCounts&, const StrataCounts&) = default;
};

/// Builds the graph from vertex and edge keys alone. Throws
/// Error(InternalInconsistency) if an edge key collects other than two
/// vertices or borders a non-separable region.
VoronoiGraph build_graph(const SideTable& table, int k);
VoronoiGraph build_graph(const DotConfig& config, int k);

StrataCounts strata_counts(const VoronoiGraph& graph);
/// (I_{k-2,n}, I_{k-1,n}, 3(2nk-2k^2-n), 2nk-2k^2-n+2).
StrataCounts expected_strata(int n, int k);

std::int64_t euler_characteristic(const VoronoiGraph& graph);
bool is_connected(const VoronoiGraph& graph);

/// True iff the two graphs have identical vertex, edge and region key sets.
bool same_keys(const VoronoiGraph& a, const VoronoiGraph& b);

/// D_-(p) and D_+(p): dots at worst tied for k-th closest, and dots at best
/// tied for (k+1)-th closest.
std::pair<DotSet, DotSet> near_far_split(const DotConfig& config, int k, const SpherePoint& p);

/// For n = 2k, checks that the antipodal map sends vertices to vertices with
/// swapped colors, edges to edges and regions to regions. Throws
/// Error(WrongOrder) otherwise.
bool antipodal_check(const VoronoiGraph& graph);

struct GluingCounts {
  std::int64_t white_vertices = 0;
  std::int64_t interior_low = 0;   // incident circles with k-2 interior dots
  std::int64_t interior_high = 0;  // incident circles with n-k-1 interior dots

  bool holds() const { return white_vertices == interior_low + interior_high; }
};

/// Compares white vertices of the spherical decomposition with the planar
/// interior counts. Needs 2 <= k <= n-1.
GluingCounts gluing_counts(const DotConfig& config, int k);
bool gluing_count_check(const DotConfig& config, int k);

}  // namespace circlesep

#include "circlesep/voronoi.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "circlesep/circles.hpp"
#include "circlesep/error.hpp"

namespace circlesep {

namespace {

std::string describe(const EdgeKey& key) {
  std::string s = "{" + std::to_string(key.pair[0] + 1) + "," + std::to_string(key.pair[1] + 1) + "}|{";
  bool first = true;
  for (int i = 0; i < kMaxDots; ++i) {
    if (!contains(key.near, i)) continue;
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

// The three edge keys at a vertex: one per pair of its triple.
std::array<EdgeKey, 3> incident_edge_keys(const VertexKey& v, Color color) {
  const auto& t = v.triple;
  const std::array<std::array<int, 3>, 3> splits{{{t[0], t[1], t[2]}, {t[0], t[2], t[1]}, {t[1], t[2], t[0]}}};
  std::array<EdgeKey, 3> keys;
  for (int e = 0; e < 3; ++e) {
    const auto& [x, y, z] = splits[e];
    keys[e] = EdgeKey{{x, y}, color == Color::White ? (v.near | bit(z)) : v.near};
  }
  return keys;
}

int region_index(const std::vector<DotSet>& regions, DotSet s) {
  const auto it = std::lower_bound(regions.begin(), regions.end(), s);
  if (it == regions.end() || *it != s) return -1;
  return static_cast<int>(it - regions.begin());
}

}  // namespace

VoronoiGraph build_graph(const SideTable& table, int k) {
  table.require_general_position();
  const int n = table.size();
  if (n < 4) throw Error(ErrorCode::SizeMismatch, "build_graph needs n >= 4");
  if (k < 1 || k >= n) throw Error(ErrorCode::IndexOutOfRange, "build_graph needs 0 < k < n");

  VoronoiGraph g;
  g.n = n;
  g.k = k;
  for (const auto& t : table.triples()) {
    for (bool reversed : {false, true}) {
      const DotSet near = left_set(t, reversed);
      const int size = popcount(near);
      if (size == k - 2) {
        g.vertices.push_back({{t.triple, reversed, near}, Color::White, {}});
      } else if (size == k - 1) {
        g.vertices.push_back({{t.triple, reversed, near}, Color::Black, {}});
      }
    }
  }
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](const VoronoiVertex& a, const VoronoiVertex& b) { return a.key < b.key; });

  std::map<EdgeKey, std::vector<int>> groups;
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    for (const auto& key : incident_edge_keys(g.vertices[v].key, g.vertices[v].color)) groups[key].push_back(v);
  }

  g.regions = enumerate_separable(table, k);
  std::vector<int> region_degree(g.regions.size(), 0);
  std::vector<int> fill(g.vertices.size(), 0);
  for (const auto& [key, members] : groups) {
    if (members.size() != 2) {
      throw Error(ErrorCode::InternalInconsistency,
                  "edge key " + describe(key) + " collects " + std::to_string(members.size()) + " vertices");
    }
    const int e = static_cast<int>(g.edges.size());
    VoronoiEdge edge{key, {members[0], members[1]}, {}};
    for (int side = 0; side < 2; ++side) {
      const int r = region_index(g.regions, key.near | bit(key.pair[side]));
      if (r < 0) {
        throw Error(ErrorCode::InternalInconsistency, "edge " + describe(key) + " borders a non-separable set");
      }
      edge.regions[side] = r;
      ++region_degree[r];
    }
    for (int v : members) g.vertices[v].edges[fill[v]++] = e;
    g.edges.push_back(edge);
  }
  for (std::size_t r = 0; r < g.regions.size(); ++r) {
    if (region_degree[r] == 0 && !g.edges.empty()) {
      throw Error(ErrorCode::InternalInconsistency, "separable set bounds no edge");
    }
  }
  return g;
}

VoronoiGraph build_graph(const DotConfig& config, int k) { return build_graph(SideTable(config), k); }

StrataCounts strata_counts(const VoronoiGraph& graph) {
  StrataCounts c;
  for (const auto& v : graph.vertices) (v.color == Color::White ? c.whites : c.blacks) += 1;
  c.edges = static_cast<std::int64_t>(graph.edges.size());
  c.regions = static_cast<std::int64_t>(graph.regions.size());
  return c;
}

StrataCounts expected_strata(int n, int k) {
  const std::int64_t m = std::int64_t{2} * n * k - std::int64_t{2} * k * k - n;
  return {oriented_incident_formula(k - 2, n), oriented_incident_formula(k - 1, n), 3 * m, m + 2};
}

std::int64_t euler_characteristic(const VoronoiGraph& graph) {
  return static_cast<std::int64_t>(graph.vertices.size()) - static_cast<std::int64_t>(graph.edges.size()) +
         static_cast<std::int64_t>(graph.regions.size());
}

bool is_connected(const VoronoiGraph& graph) {
  const auto nv = graph.vertices.size();
  if (nv == 0) return true;
  std::vector<bool> seen(nv, false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : graph.vertices[v].edges) {
      for (int w : graph.edges[e].vertices) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
  }
  return reached == nv;
}

bool same_keys(const VoronoiGraph& a, const VoronoiGraph& b) {
  if (a.n != b.n || a.k != b.k || a.regions != b.regions) return false;
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.vertices.size(); ++i)
    if (a.vertices[i].key != b.vertices[i].key) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (a.edges[i].key != b.edges[i].key) return false;
  return true;
}

std::pair<DotSet, DotSet> near_far_split(const DotConfig& config, int k, const SpherePoint& p) {
  const int n = config.size();
  if (k < 1 || k >= n) throw Error(ErrorCode::IndexOutOfRange, "near_far_split needs 0 < k < n");
  std::vector<Rational> closeness(n);
  for (int i = 0; i < n; ++i) closeness[i] = dot(p, config.dot(i));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return closeness[a] > closeness[b]; });
  const Rational& kth = closeness[order[k - 1]];
  const Rational& next = closeness[order[k]];
  DotSet minus = 0, plus = 0;
  for (int i = 0; i < n; ++i) {
    if (closeness[i] >= kth) minus |= bit(i);
    if (closeness[i] <= next) plus |= bit(i);
  }
  return {minus, plus};
}

bool antipodal_check(const VoronoiGraph& graph) {
  if (graph.n != 2 * graph.k) {
    throw Error(ErrorCode::WrongOrder, "antipodal symmetry needs n = 2k (n=" + std::to_string(graph.n) +
                                           ", k=" + std::to_string(graph.k) + ")");
  }
  const DotSet all = full_set(graph.n);
  auto find_vertex = [&](const VertexKey& key) -> const VoronoiVertex* {
    const auto it = std::lower_bound(graph.vertices.begin(), graph.vertices.end(), key,
                                     [](const VoronoiVertex& v, const VertexKey& k) { return v.key < k; });
    return it != graph.vertices.end() && it->key == key ? &*it : nullptr;
  };
  for (const auto& v : graph.vertices) {
    const VertexKey image{v.key.triple, !v.key.reversed, all & ~(v.key.near | to_set(v.key.triple))};
    const VoronoiVertex* w = find_vertex(image);
    if (w == nullptr || w->color == v.color) return false;
  }
  for (const auto& e : graph.edges) {
    const EdgeKey image{e.key.pair, all & ~(e.key.near | bit(e.key.pair[0]) | bit(e.key.pair[1]))};
    const auto it = std::lower_bound(graph.edges.begin(), graph.edges.end(), image,
                                     [](const VoronoiEdge& x, const EdgeKey& k) { return x.key < k; });
    if (it == graph.edges.end() || it->key != image) return false;
  }
  for (DotSet r : graph.regions) {
    if (!std::binary_search(graph.regions.begin(), graph.regions.end(), all & ~r)) return false;
  }
  return true;
}

GluingCounts gluing_counts(const DotConfig& config, int k) {
  const int n = config.size();
  if (k < 2 || k > n - 1) throw Error(ErrorCode::IndexOutOfRange, "gluing check needs 2 <= k <= n-1");
  const auto hist = planar_interior_histogram(config);
  auto at = [&](int c) {
    const auto it = hist.find(c);
    return it == hist.end() ? std::int64_t{0} : it->second;
  };
  GluingCounts out;
  out.white_vertices = strata_counts(build_graph(config, k)).whites;
  out.interior_low = at(k - 2);
  out.interior_high = at(n - k - 1);
  return out;
}

bool gluing_count_check(const DotConfig& config, int k) { return gluing_counts(config, k).holds(); }

}  // namespace circlesep

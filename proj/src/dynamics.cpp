#include "circlesep/dynamics.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "circlesep/error.hpp"
#include "circlesep/side_table.hpp"

namespace circlesep {

namespace {

std::string describe(const Quadruple& q) {
  return "{" + std::to_string(q[0] + 1) + "," + std::to_string(q[1] + 1) + "," + std::to_string(q[2] + 1) + "," +
         std::to_string(q[3] + 1) + "}";
}

DotSet quad_set(const Quadruple& q) { return bit(q[0]) | bit(q[1]) | bit(q[2]) | bit(q[3]); }

Polynomial det4(const std::array<std::array<Polynomial, 4>, 4>& m) {
  std::array<int, 4> perm{0, 1, 2, 3};
  Polynomial total;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    Polynomial term = m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]] * m[3][perm[3]];
    total = inversions % 2 == 0 ? total + term : total - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

const TripleSides& find_triple(const SideTable& table, const Triple& t) {
  const auto& all = table.triples();
  const auto it = std::lower_bound(all.begin(), all.end(), t,
                                   [](const TripleSides& s, const Triple& key) { return s.triple < key; });
  return *it;
}

std::array<Triple, 4> triples_of(const Quadruple& q) {
  return {Triple{q[0], q[1], q[2]}, Triple{q[0], q[1], q[3]}, Triple{q[0], q[2], q[3]}, Triple{q[1], q[2], q[3]}};
}

struct Normal {
  Rational x, y, z;
};

Normal normal_of(const DotConfig& c, const Triple& t) {
  const auto& a = c.dot(t[0]);
  const auto& b = c.dot(t[1]);
  const auto& d = c.dot(t[2]);
  const Rational bx = b.x() - a.x(), by = b.y() - a.y(), bz = b.z() - a.z();
  const Rational cx = d.x() - a.x(), cy = d.y() - a.y(), cz = d.z() - a.z();
  return {by * cz - bz * cy, bz * cx - bx * cz, bx * cy - by * cx};
}

Rational dot(const Normal& a, const Normal& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Narrows an isolating interval of a squarefree polynomial around its root.
void narrow(RootInterval& iv, const Polynomial& squarefree, const SturmSequence& sturm) {
  const Rational mid = split_point(iv.lo, iv.hi, {&squarefree});
  if (sturm.count_roots(iv.lo, mid) == 1) {
    iv.hi = mid;
  } else {
    iv.lo = mid;
  }
}

std::vector<VertexKey> key_difference(const VoronoiGraph& a, const VoronoiGraph& b) {
  std::vector<VertexKey> ka, kb, out;
  for (const auto& v : a.vertices) ka.push_back(v.key);
  for (const auto& v : b.vertices) kb.push_back(v.key);
  std::set_difference(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(out));
  return out;
}

std::vector<EdgeKey> edge_difference(const VoronoiGraph& a, const VoronoiGraph& b) {
  std::vector<EdgeKey> ka, kb, out;
  for (const auto& e : a.edges) ka.push_back(e.key);
  for (const auto& e : b.edges) kb.push_back(e.key);
  std::set_difference(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(out));
  return out;
}

void require_local_edges(const VoronoiGraph& g, const std::vector<EdgeKey>& changed, DotSet quad) {
  for (const auto& key : changed) {
    const auto it = std::lower_bound(g.edges.begin(), g.edges.end(), key,
                                     [](const VoronoiEdge& e, const EdgeKey& k) { return e.key < k; });
    const bool local = std::any_of(it->vertices.begin(), it->vertices.end(), [&](int v) {
      return (to_set(g.vertices[v].key.triple) & ~quad) == 0;
    });
    if (!local) throw Error(ErrorCode::NonLocalChange, "an edge away from the crossing quadruple changed");
  }
}

MoveKind classify_center(const std::vector<VertexKey>& before, const std::vector<VertexKey>& after, int k) {
  auto color = [k](const VertexKey& v) { return popcount(v.near) == k - 2 ? Color::White : Color::Black; };
  auto all_of_color = [&](const std::vector<VertexKey>& vs, Color c) {
    return std::all_of(vs.begin(), vs.end(), [&](const VertexKey& v) { return color(v) == c; });
  };
  auto orientations = [](const std::vector<VertexKey>& vs) {
    std::set<std::pair<Triple, bool>> s;
    for (const auto& v : vs) s.insert({v.triple, v.reversed});
    return s;
  };
  if (before.empty() && after.empty()) return MoveKind::NoOp;
  if (before.size() == 4 && after.size() == 4 && orientations(before) == orientations(after)) {
    bool swapped = true;
    for (const auto& b : before) {
      for (const auto& a : after) {
        if (a.triple == b.triple && a.reversed == b.reversed && color(a) == color(b)) swapped = false;
      }
    }
    if (swapped) return MoveKind::SquareMove;
  }
  if (before.size() == 2 && after.size() == 2) {
    const auto ob = orientations(before);
    const auto oa = orientations(after);
    std::vector<std::pair<Triple, bool>> common;
    std::set_intersection(ob.begin(), ob.end(), oa.begin(), oa.end(), std::back_inserter(common));
    if (common.empty()) {
      if (all_of_color(before, Color::White) && all_of_color(after, Color::White)) return MoveKind::WhiteReconnect;
      if (all_of_color(before, Color::Black) && all_of_color(after, Color::Black)) return MoveKind::BlackReconnect;
    }
  }
  throw Error(ErrorCode::InternalInconsistency, "local change matches none of the three moves");
}

MoveKind expected_kind(int near_count, int k) {
  if (near_count == k - 3) return MoveKind::WhiteReconnect;
  if (near_count == k - 2) return MoveKind::SquareMove;
  if (near_count == k - 1) return MoveKind::BlackReconnect;
  return MoveKind::NoOp;
}

struct Classified {
  MoveEvent event;
  VoronoiGraph before;
  VoronoiGraph after;
};

// For each triple of the quadruple, the orientation whose left center sits
// near the first center of the crossing circle.
std::array<bool, 4> group_by_outside_sets(const SideTable& lo, const SideTable& hi, const Quadruple& q) {
  const DotSet outside = ~quad_set(q);
  const auto triples = triples_of(q);
  const DotSet ref = find_triple(lo, triples[0]).left & outside;
  std::array<bool, 4> reversed{};
  for (int i = 0; i < 4; ++i) {
    const auto& s_lo = find_triple(lo, triples[i]);
    const auto& s_hi = find_triple(hi, triples[i]);
    if ((s_lo.left & outside) != (s_hi.left & outside)) {
      throw Error(ErrorCode::NonLocalChange, "a dot outside the quadruple crossed an incident circle");
    }
    if ((s_lo.left & outside) == ref) {
      reversed[i] = false;
    } else if ((s_lo.right & outside) == ref) {
      reversed[i] = true;
    } else {
      throw Error(ErrorCode::InternalInconsistency, "triples of the crossing quadruple disagree on sides");
    }
  }
  return reversed;
}

// Geometric grouping for n = 4, where every outside set is empty: orient each
// triple so its plane normal is nearly parallel to the reference normal at
// both ends of the interval, narrowing the interval until that holds.
std::array<bool, 4> group_by_normals(const Family& family, WallEvent& event, int wall_index) {
  const auto triples = triples_of(event.quadruple);
  const Polynomial sf = squarefree_part(family.walls[wall_index]);
  const SturmSequence sturm(sf);
  RootInterval iv{event.lo, event.hi};
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::array<bool, 4> reversed{};
    bool settled = true;
    for (const auto& t : {iv.lo, iv.hi}) {
      const DotConfig c = config_at(family, t);
      const Normal ref = normal_of(c, triples[0]);
      for (int i = 0; i < 4 && settled; ++i) {
        const Normal nv = normal_of(c, triples[i]);
        const Rational d = dot(nv, ref);
        const bool rev = d < 0;
        if (t == iv.lo) {
          reversed[i] = rev;
        } else if (reversed[i] != rev) {
          settled = false;
        }
        // cos^2 > 3/4, i.e. within 30 degrees of (anti)parallel.
        if (4 * d * d <= 3 * dot(nv, nv) * dot(ref, ref)) settled = false;
      }
    }
    if (settled) {
      event.lo = iv.lo;
      event.hi = iv.hi;
      return reversed;
    }
    narrow(iv, sf, sturm);
  }
  throw Error(ErrorCode::InternalInconsistency, "could not separate the two centers of " + describe(event.quadruple));
}

Classified classify_impl(const Family& family, const WallEvent& input, int k) {
  if (!input.transversal) {
    throw Error(ErrorCode::TangentialTouch, "quadruple " + describe(input.quadruple) + " touches without crossing");
  }
  const auto q_it = std::lower_bound(family.quadruples.begin(), family.quadruples.end(), input.quadruple);
  if (q_it == family.quadruples.end() || *q_it != input.quadruple) {
    throw Error(ErrorCode::IndexOutOfRange, "event quadruple not in family");
  }
  const int wall_index = static_cast<int>(q_it - family.quadruples.begin());

  WallEvent event = input;
  std::array<bool, 4> reversed_a{};
  const bool geometric = family.size() == 4;
  if (geometric) reversed_a = group_by_normals(family, event, wall_index);

  const DotConfig cfg_lo = config_at(family, event.lo);
  const DotConfig cfg_hi = config_at(family, event.hi);
  const SideTable lo(cfg_lo);
  const SideTable hi(cfg_hi);
  if (!geometric) reversed_a = group_by_outside_sets(lo, hi, event.quadruple);

  Classified out{MoveEvent{}, build_graph(lo, k), build_graph(hi, k)};
  MoveEvent& m = out.event;
  m.wall = event;
  m.counts_before = strata_counts(out.before);
  m.counts_after = strata_counts(out.after);
  if (m.counts_before != m.counts_after) {
    throw Error(ErrorCode::InternalInconsistency, "strata counts changed across " + describe(event.quadruple));
  }

  const DotSet quad = quad_set(event.quadruple);
  m.affected_before = key_difference(out.before, out.after);
  m.affected_after = key_difference(out.after, out.before);
  for (const auto* keys : {&m.affected_before, &m.affected_after}) {
    for (const auto& v : *keys) {
      if ((to_set(v.triple) & ~quad) != 0) {
        throw Error(ErrorCode::NonLocalChange, "vertex away from " + describe(event.quadruple) + " changed");
      }
    }
  }
  require_local_edges(out.before, edge_difference(out.before, out.after), quad);
  require_local_edges(out.after, edge_difference(out.after, out.before), quad);

  const auto triples = triples_of(event.quadruple);
  std::vector<VertexKey> seen_before, seen_after;
  for (int c = 0; c < 2; ++c) {
    CenterMove& center = m.centers[c];
    for (int i = 0; i < 4; ++i) {
      const bool rev = reversed_a[i] != (c == 1);
      const DotSet l_lo = left_set(find_triple(lo, triples[i]), rev);
      const DotSet l_hi = left_set(find_triple(hi, triples[i]), rev);
      center.near_count = popcount(l_lo & ~quad);
      if (popcount(l_lo) == k - 2 || popcount(l_lo) == k - 1) center.before.push_back({triples[i], rev, l_lo});
      if (popcount(l_hi) == k - 2 || popcount(l_hi) == k - 1) center.after.push_back({triples[i], rev, l_hi});
    }
    std::sort(center.before.begin(), center.before.end());
    std::sort(center.after.begin(), center.after.end());
    center.kind = classify_center(center.before, center.after, k);
    if (center.kind != expected_kind(center.near_count, k)) {
      throw Error(ErrorCode::InternalInconsistency, std::string("center classified as ") + to_string(center.kind) +
                                                        " but its near count is " +
                                                        std::to_string(center.near_count));
    }
    seen_before.insert(seen_before.end(), center.before.begin(), center.before.end());
    seen_after.insert(seen_after.end(), center.after.begin(), center.after.end());
  }
  std::sort(seen_before.begin(), seen_before.end());
  std::sort(seen_after.begin(), seen_after.end());
  if (seen_before != m.affected_before || seen_after != m.affected_after) {
    throw Error(ErrorCode::NonLocalChange, "graph change is not confined to the two centers");
  }

  const MoveKind a = m.centers[0].kind;
  const MoveKind b = m.centers[1].kind;
  m.kind = a != MoveKind::NoOp ? a : b;
  m.antipodal_paired = a != MoveKind::NoOp && b != MoveKind::NoOp;
  if (m.antipodal_paired) m.second_kind = b;
  return out;
}

std::vector<PlanarPoint> jittered_midpoint(const std::vector<PlanarPoint>& a, const std::vector<PlanarPoint>& b,
                                           std::mt19937_64& rng) {
  const Rational step = make_rational(1, 1024);
  std::vector<PlanarPoint> mid;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational du = (rng() & 1U) ? step : Rational(-step);
    const Rational dv = (rng() & 1U) ? step : Rational(-step);
    mid.push_back({Rational((a[i].u + b[i].u) / 2 + du), Rational((a[i].v + b[i].v) / 2 + dv)});
  }
  return mid;
}

}  // namespace

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::SquareMove: return "SquareMove";
    case MoveKind::WhiteReconnect: return "WhiteReconnect";
    case MoveKind::BlackReconnect: return "BlackReconnect";
    case MoveKind::NoOp: return "NoOp";
  }
  return "Unknown";
}

Polynomial wall_polynomial(const std::array<PlanarPoint, 4>& start, const std::array<PlanarPoint, 4>& end) {
  std::array<std::array<Polynomial, 4>, 4> m;
  for (int i = 0; i < 4; ++i) {
    const Polynomial u = Polynomial::linear(start[i].u, Rational(end[i].u - start[i].u));
    const Polynomial v = Polynomial::linear(start[i].v, Rational(end[i].v - start[i].v));
    m[i] = {u, v, u * u + v * v, Polynomial(Rational(1))};
  }
  // Scaling the lifted rows (x, y, z, 1) by 1 + u^2 + v^2 > 0 and combining
  // columns turns the 4x4 orientation determinant into 8 * det(u, v, u^2+v^2, 1),
  // and that 4x4 determinant is the negative of det[b-a, c-a, d-a].
  return -det4(m);
}

Family make_family(const DotConfig& a, const DotConfig& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::SizeMismatch, "family endpoints differ in size");
  for (const auto* c : {&a, &b}) {
    const auto report = is_general_position(*c);
    if (!report.certified()) {
      throw Error(ErrorCode::NotGeneralPosition, "family endpoint has cocircular dots " + describe(*report.violation));
    }
  }
  Family f{a.planar(), b.planar(), {}, {}};
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const Quadruple q{i, j, k, l};
          Polynomial w = wall_polynomial({f.start[i], f.start[j], f.start[k], f.start[l]},
                                         {f.end[i], f.end[j], f.end[k], f.end[l]});
          if (w.is_zero()) {
            throw Error(ErrorCode::IdenticallyDegeneratePath, "quadruple " + describe(q) + " stays cocircular");
          }
          f.quadruples.push_back(q);
          f.walls.push_back(std::move(w));
        }
  return f;
}

PlanarPoint position_at(const Family& family, int dot, const Rational& t) {
  const auto& s = family.start[dot];
  const auto& e = family.end[dot];
  return {Rational(s.u + t * (e.u - s.u)), Rational(s.v + t * (e.v - s.v))};
}

DotConfig config_at(const Family& family, const Rational& t) {
  std::vector<PlanarPoint> planar;
  planar.reserve(family.start.size());
  for (int i = 0; i < family.size(); ++i) planar.push_back(position_at(family, i, t));
  return DotConfig::from_planar(std::move(planar));
}

std::vector<WallEvent> detect_walls(const Family& family) {
  struct Candidate {
    int wall;
    RootInterval iv;
  };
  std::map<int, std::pair<Polynomial, SturmSequence>> isolators;
  std::vector<Candidate> cands;
  for (int w = 0; w < static_cast<int>(family.walls.size()); ++w) {
    const auto roots = isolate_roots(family.walls[w], Rational(0), Rational(1));
    if (roots.empty()) continue;
    Polynomial sf = squarefree_part(family.walls[w]);
    SturmSequence sturm(sf);
    isolators.emplace(w, std::make_pair(std::move(sf), std::move(sturm)));
    for (const auto& iv : roots) cands.push_back({w, iv});
  }

  // Pairs whose roots were shown distinct; only interval width remains.
  std::set<std::pair<int, int>> distinct;
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return x.iv.lo < y.iv.lo; });
    for (std::size_t i = 0; i + 1 < cands.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < cands.size() && cands[j].iv.lo < cands[i].iv.hi; ++j) {
        Candidate& x = cands[i];
        Candidate& y = cands[j];
        const auto key = std::minmax(x.wall, y.wall);
        if (!distinct.count(key)) {
          const Polynomial g = gcd(family.walls[x.wall], family.walls[y.wall]);
          if (g.degree() >= 1) {
            const Rational lo = std::max(x.iv.lo, y.iv.lo);
            const Rational hi = std::min(x.iv.hi, y.iv.hi);
            if (SturmSequence(squarefree_part(g)).count_roots(lo, hi) > 0) {
              throw Error(ErrorCode::NotSemigeneral, "quadruples " + describe(family.quadruples[x.wall]) + " and " +
                                                         describe(family.quadruples[y.wall]) +
                                                         " are cocircular at the same time");
            }
          }
          distinct.insert(key);
        }
        Candidate& wider = (x.iv.hi - x.iv.lo) >= (y.iv.hi - y.iv.lo) ? x : y;
        const auto& iso = isolators.at(wider.wall);
        narrow(wider.iv, iso.first, iso.second);
        changed = true;
        break;
      }
    }
  }

  std::vector<WallEvent> events;
  for (const auto& c : cands) {
    const Polynomial& f = family.walls[c.wall];
    const int s_lo = f.sign_at(c.iv.lo);
    const int s_hi = f.sign_at(c.iv.hi);
    events.push_back({family.quadruples[c.wall], c.iv.lo, c.iv.hi, s_lo != s_hi, s_lo});
  }
  return events;
}

MoveEvent classify_move(const Family& family, const WallEvent& event, int k) {
  return classify_impl(family, event, k).event;
}

MoveLog move_sequence(const DotConfig& a, const DotConfig& b, int k) {
  const Family family = make_family(a, b);
  const auto walls = detect_walls(family);
  MoveLog log;
  log.waypoints = {a.planar(), b.planar()};
  VoronoiGraph current = build_graph(a, k);
  for (const auto& wall : walls) {
    if (!wall.transversal) {
      const VoronoiGraph lo = build_graph(config_at(family, wall.lo), k);
      const VoronoiGraph hi = build_graph(config_at(family, wall.hi), k);
      if (!same_keys(current, lo) || !same_keys(lo, hi)) {
        throw Error(ErrorCode::InternalInconsistency, "graph changed across a tangential touch");
      }
      log.tangential.push_back(wall);
      continue;
    }
    Classified c = classify_impl(family, wall, k);
    if (!same_keys(current, c.before)) {
      throw Error(ErrorCode::InternalInconsistency, "graph changed between consecutive walls");
    }
    current = std::move(c.after);
    log.events.push_back(std::move(c.event));
  }
  log.endpoints_match = same_keys(current, build_graph(b, k));
  return log;
}

MoveLog move_sequence_with_retry(const DotConfig& a, const DotConfig& b, int k, int max_retries, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MoveLog total;
  total.waypoints.push_back(a.planar());
  int segment = 0;
  bool all_match = true;

  // Depth-first over segments so events stay in path order.
  std::vector<std::pair<DotConfig, DotConfig>> pending{{a, b}};
  while (!pending.empty()) {
    auto [from, to] = std::move(pending.back());
    pending.pop_back();
    try {
      MoveLog part = move_sequence(from, to, k);
      all_match = all_match && part.endpoints_match;
      for (auto& e : part.events) {
        e.segment = segment;
        total.events.push_back(std::move(e));
      }
      for (auto& w : part.tangential) total.tangential.push_back(std::move(w));
      total.waypoints.push_back(to.planar());
      ++segment;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotSemigeneral) throw;
      if (total.retries >= max_retries) {
        throw Error(ErrorCode::RetriesExhausted, std::string(err.what()) + " after " + std::to_string(max_retries) +
                                                     " perturbed retries");
      }
      ++total.retries;
      std::optional<DotConfig> mid;
      while (!mid) {
        auto planar = jittered_midpoint(from.planar(), to.planar(), rng);
        std::vector<PlanarPoint> unique = planar;
        std::sort(unique.begin(), unique.end(), [](const PlanarPoint& x, const PlanarPoint& y) {
          return x.u != y.u ? x.u < y.u : x.v < y.v;
        });
        if (std::adjacent_find(unique.begin(), unique.end()) != unique.end()) continue;
        DotConfig cand = DotConfig::from_planar(std::move(planar));
        if (is_general_position(cand).certified()) mid = std::move(cand);
      }
      pending.emplace_back(*mid, to);
      pending.emplace_back(from, *mid);
    }
  }
  // Segments chain from a to b and each reached its own endpoint graph.
  total.endpoints_match = all_match;
  return total;
}

}  // namespace circlesep

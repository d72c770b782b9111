// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "circlesep/circles.hpp"
#include "circlesep/dynamics.hpp"
#include "circlesep/error.hpp"
#include "circlesep/separability_oracle.hpp"
#include "circlesep/voronoi.hpp"
#include "support.hpp"

using namespace circlesep;
using namespace circlesep::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

template <class... T>
std::string cat(const T&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

constexpr int kSeeds = 20;

Outcome incident_counts() {
  Outcome o;
  if (incident_histogram(five_dot_example()).at({1, 1}) != 4) o.fail("five-dot example {1,1} != 4");
  int configs = 0;
  for (int n = 3; n <= 10; ++n)
    for (int s = 0; s < kSeeds; ++s, ++configs) {
      const auto hist = incident_histogram(random_config(n, s));
      std::int64_t total = 0;
      for (const auto& [kl, count] : hist) {
        total += count;
        if (count != side_count_closed_form(kl.first, kl.second)) o.fail(cat("n=", n, " seed=", s, " {", kl.first, ",", kl.second, "}"));
      }
      if (total != binom(n, 3)) o.fail(cat("n=", n, " seed=", s, " total"));
    }
  if (o.pass) o.detail = cat(configs, " configs, n in [3,10]; five-dot {1,1} = 4");
  return o;
}

Outcome avoidant_counts() {
  Outcome o;
  int configs = 0;
  for (int n = 4; n <= 10; ++n)
    for (int s = 0; s < kSeeds; ++s, ++configs) {
      const SideTable t(random_config(n, s));
      for (int k = 1; 2 * k <= n; ++k)
        if (avoidant_partition_count(t, k, n - k) != avoidant_closed_form(k, n - k))
          o.fail(cat("n=", n, " seed=", s, " {", k, ",", n - k, "}"));
    }
  if (avoidant_partition_count(random_config(6, 0), 3, 3) != 7) o.fail("n=6 {3,3} != 7");
  if (o.pass) o.detail = cat(configs, " configs, n in [4,10]; n=6 {3,3} = 7");
  return o;
}

Outcome hull_faces() {
  Outcome o;
  for (int n = 4; n <= 10; ++n)
    for (int s = 0; s < kSeeds; ++s)
      if (hull_face_count(random_config(n, s)) != 2 * n - 4) o.fail(cat("n=", n, " seed=", s));
  if (o.pass) o.detail = "2n-4 faces for n in [4,10], 20 seeds each";
  return o;
}

Outcome double_count() {
  Outcome o;
  int deletions = 0;
  for (int n = 5; n <= 9; ++n)
    for (int s = 0; s < 10; ++s) {
      const auto c = random_config(n, s);
      const SideTable full(c);
      std::vector<SideTable> del;
      for (int d = 0; d < n; ++d, ++deletions) del.emplace_back(c.without(d));
      for (int k = 1; k <= n - 3; ++k) {
        // Each deletion alone: n I_{k-1,n-1} = (n-k-2) I_{k-1,n} + k I_{k,n}.
        const std::int64_t rhs = (n - k - 2) * count_oriented_incident(full, k - 1) + k * count_oriented_incident(full, k);
        std::int64_t sum = 0;
        for (int d = 0; d < n; ++d) {
          const auto counted = count_oriented_incident(del[d], k - 1);
          sum += counted;
          if (n * counted != rhs) o.fail(cat("n=", n, " seed=", s, " k=", k, " deleting ", d + 1));
        }
        if (sum != rhs) o.fail(cat("n=", n, " seed=", s, " k=", k, " summed"));
      }
    }
  if (o.pass) o.detail = cat(deletions, " dot deletions, n in [5,9]");
  return o;
}

Outcome voronoi_strata() {
  Outcome o;
  if (!(strata_counts(build_graph(random_config(6, 0), 2)) == StrataCounts{8, 12, 30, 12})) o.fail("(k,n)=(2,6) anchor");
  int graphs = 0;
  for (int n = 4; n <= 10; ++n)
    for (int s = 0; s < 5; ++s) {
      const SideTable t(random_config(n, s));
      for (int k = 1; k < n; ++k, ++graphs) {
        const auto g = build_graph(t, k);
        const std::int64_t m = 2LL * n * k - 2LL * k * k - n;
        if (!(strata_counts(g) == StrataCounts{I(k - 2, n), I(k - 1, n), 3 * m, m + 2}))
          o.fail(cat("n=", n, " k=", k, " seed=", s, " counts"));
        if (euler_characteristic(g) != 2) o.fail(cat("n=", n, " k=", k, " seed=", s, " euler"));
      }
    }
  if (o.pass) o.detail = cat(graphs, " graphs, n in [4,10], all k; (2,6) -> (8,12,30,12)");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  long subsets = 0;
  for (int n = 4; n <= 9; ++n)
    for (int s = 0; s < 10; ++s) {
      const auto c = random_config(n, s);
      const SideTable t(c);
      std::set<DotSet> sweep;
      for (int k = 1; k < n; ++k)
        for (DotSet x : enumerate_separable(t, k)) sweep.insert(x);
      for (DotSet x = 1; x < full_set(n); ++x, ++subsets)
        if (oracle_separable(c, x) != (sweep.count(x) == 1)) o.fail(cat("n=", n, " seed=", s, " subset ", x));
    }
  if (o.pass) o.detail = cat(subsets, " subsets, n in [4,9], 10 seeds each");
  return o;
}

Outcome antipodal() {
  Outcome o;
  for (int k : {2, 3, 4})
    for (int s = 0; s < 5; ++s)
      if (!antipodal_check(build_graph(random_config(2 * k, s), k))) o.fail(cat("(k,n)=(", k, ",", 2 * k, ") seed=", s));
  if (o.pass) o.detail = "(2,4), (3,6), (4,8), 5 seeds each";
  return o;
}

Outcome planar_interiors() {
  Outcome o;
  const auto a = planar_interior_histogram(center_and_triangle());
  const auto b = planar_interior_histogram(two_interior_circles());
  if (a.at(1) != 1 || b.at(1) != 2) o.fail("circles with one interior dot should be 1 vs 2");
  if (incident_histogram(center_and_triangle()) != incident_histogram(two_interior_circles())) o.fail("side counts differ");
  if (!gluing_count_check(center_and_triangle(), 2) || !gluing_count_check(two_interior_circles(), 2))
    o.fail("gluing on the fixed pair");
  for (int n = 4; n <= 8; ++n)
    for (int s = 0; s < 5; ++s)
      for (int k = 2; k <= n - 1; ++k)
        if (!gluing_count_check(random_config(n, s), k)) o.fail(cat("gluing n=", n, " k=", k, " seed=", s));
  if (o.pass) o.detail = "one interior dot: 1 vs 2 circles, same side counts; gluing n in [4,8]";
  return o;
}

Outcome dynamics() {
  Outcome o;
  int events = 0, retries = 0;
  std::map<MoveKind, int> kinds;
  for (const auto& [n, k] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 3}})
    for (int s = 0; s < 10; ++s) {
      const auto log = move_sequence_with_retry(random_config(n, 500 + s), random_config(n, 900 + s), k, 8, s);
      retries += log.retries;
      if (!log.endpoints_match) o.fail(cat("n=", n, " pair ", s, " endpoints"));
      for (const auto& e : log.events) {
        ++events;
        ++kinds[e.kind];
        DotSet q = 0;
        for (int i : e.wall.quadruple) q |= bit(i);
        for (const auto* side : {&e.affected_before, &e.affected_after})
          for (const auto& v : *side)
            if ((to_set(v.triple) & ~q) != 0) o.fail(cat("n=", n, " pair ", s, " non-local vertex"));
        const std::int64_t m = 2LL * n * k - 2LL * k * k - n;
        const StrataCounts want{I(k - 2, n), I(k - 1, n), 3 * m, m + 2};
        if (!(e.counts_before == want) || !(e.counts_after == want)) o.fail(cat("n=", n, " pair ", s, " counts"));
        if (n == 2 * k && e.kind != MoveKind::NoOp && !e.antipodal_paired) o.fail(cat("n=", n, " pair ", s, " unpaired"));
      }
    }
  if (o.pass)
    o.detail = cat("30 pairs, ", events, " events (square ", kinds[MoveKind::SquareMove], ", white ",
                   kinds[MoveKind::WhiteReconnect], ", black ", kinds[MoveKind::BlackReconnect], ", no-op ",
                   kinds[MoveKind::NoOp], "), ", retries, " path splits");
  return o;
}

Outcome rotations() {
  Outcome o;
  const std::array<std::array<long, 4>, 6> quats{{{1, 2, 3, 4}, {2, -1, 1, 3}, {5, 1, -2, 1}, {1, 1, 1, 7}, {3, -4, 2, 2}, {6, 2, 5, -1}}};
  int rotated = 0;
  for (int n = 3; n <= 10; ++n)
    for (int s = 0; s < kSeeds; ++s) {
      const auto c = random_config(n, s);
      const auto hist = incident_histogram(c);
      const auto hull = n >= 4 ? hull_face_count(c) : 0;
      std::vector<std::int64_t> avoid;
      for (int k = 1; n >= 4 && 2 * k <= n; ++k) avoid.push_back(avoidant_partition_count(c, k, n - k));
      int done = 0;
      for (const auto& q : quats) {
        if (done == 5) break;
        DotConfig r = c;
        try {
          r = rotate(c, rotation_from_quaternion(q[0], q[1], q[2], q[3]));
        } catch (const Error& e) {
          if (e.code() == ErrorCode::PoleProjection) continue;
          throw;
        }
        ++done;
        ++rotated;
        if (incident_histogram(r) != hist) o.fail(cat("n=", n, " seed=", s, " incident"));
        if (n >= 4 && hull_face_count(r) != hull) o.fail(cat("n=", n, " seed=", s, " hull"));
        for (int k = 1; n >= 4 && 2 * k <= n; ++k)
          if (avoidant_partition_count(r, k, n - k) != avoid[k - 1]) o.fail(cat("n=", n, " seed=", s, " avoidant"));
      }
      if (done < 5) o.fail(cat("n=", n, " seed=", s, " only ", done, " usable rotations"));
    }
  if (o.pass) o.detail = cat(rotated, " rotated configs, n in [3,10]");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"incident circle side counts", incident_counts},
      {"avoidant partition counts", avoidant_counts},
      {"hull face count", hull_faces},
      {"deletion double count", double_count},
      {"Voronoi strata and Euler characteristic", voronoi_strata},
      {"sweep vs linear-feasibility oracle", oracle_equivalence},
      {"antipodal involution at n = 2k", antipodal},
      {"planar interiors and gluing", planar_interiors},
      {"local moves along families", dynamics},
      {"rotation invariance", rotations},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}

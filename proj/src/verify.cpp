#include "circlesep/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "circlesep/circles.hpp"
#include "circlesep/dynamics.hpp"
#include "circlesep/error.hpp"
#include "circlesep/separability_oracle.hpp"
#include "circlesep/voronoi.hpp"

namespace circlesep {

namespace {

using Clock = std::chrono::steady_clock;

// A check returns an empty string on success, otherwise what went wrong.
using Check = std::function<std::string()>;

CheckResult run(const std::string& name, int n, std::uint64_t seed, const Check& body) {
  CheckResult r;
  r.name = name;
  r.n = n;
  r.seed = seed;
  const auto t0 = Clock::now();
  try {
    r.detail = body();
    r.pass = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

template <class A, class B>
std::string differ(const std::string& what, const A& got, const B& want) {
  std::ostringstream os;
  os << what << ": got " << got << ", expected " << want;
  return os.str();
}

std::string counts_str(const StrataCounts& c) {
  std::ostringstream os;
  os << "(" << c.whites << "," << c.blacks << "," << c.edges << "," << c.regions << ")";
  return os.str();
}

// Incident and avoidant histograms, compared as whole maps.
struct CountSummary {
  SideHistogram incident;
  std::vector<std::int64_t> avoidant;
  std::int64_t hull = 0;

  bool operator==(const CountSummary&) const = default;
};

CountSummary summarize(const SideTable& table) {
  CountSummary s{incident_histogram(table), {}, 0};
  const int n = table.size();
  if (n >= 4) {
    s.hull = hull_face_count(table);
    for (int k = 1; 2 * k <= n; ++k) s.avoidant.push_back(avoidant_partition_count(table, k, n - k));
  }
  return s;
}

std::vector<CheckResult> run_cell(const VerifyGrid& grid, int n, std::uint64_t seed) {
  std::vector<CheckResult> out;
  const DotConfig config = random_config(n, seed);
  const SideTable table(config, grid.fault);
  auto add = [&](const std::string& name, const Check& body) { out.push_back(run(name, n, seed, body)); };

  add("incident_histogram", [&]() -> std::string {
    const auto hist = incident_histogram(table);
    for (int k = 0; 2 * k <= n - 3; ++k) {
      const auto it = hist.find({k, n - 3 - k});
      const std::int64_t got = it == hist.end() ? 0 : it->second;
      if (got != incident_formula(k, n - 3 - k))
        return differ("{" + std::to_string(k) + "," + std::to_string(n - 3 - k) + "}", got, incident_formula(k, n - 3 - k));
    }
    return {};
  });

  add("oriented_incident", [&]() -> std::string {
    for (int k = 0; k <= n - 3; ++k)
      if (count_oriented_incident(table, k) != oriented_incident_formula(k, n))
        return differ("k=" + std::to_string(k), count_oriented_incident(table, k), oriented_incident_formula(k, n));
    return {};
  });

  if (n >= 4) {
    add("hull_faces", [&]() -> std::string {
      const auto h = hull_face_count(table);
      return h == 2 * n - 4 ? std::string{} : differ("faces", h, 2 * n - 4);
    });

    add("avoidant", [&]() -> std::string {
      for (int k = 1; 2 * k <= n; ++k)
        if (avoidant_partition_count(table, k, n - k) != avoidant_formula(k, n - k))
          return differ("k=" + std::to_string(k), avoidant_partition_count(table, k, n - k), avoidant_formula(k, n - k));
      return {};
    });
  }

  if (n >= 5) {
    // Summing I_{k-1} over all deletions counts each oriented circle of the
    // full configuration once per dot off it, split by that dot's side.
    add("double_count", [&]() -> std::string {
      std::vector<SideTable> deleted;
      for (int d = 0; d < n; ++d) deleted.emplace_back(config.without(d));
      for (int k = 1; k <= n - 3; ++k) {
        std::int64_t lhs = 0;
        for (const auto& t : deleted) lhs += count_oriented_incident(t, k - 1);
        const std::int64_t rhs =
            (n - k - 2) * count_oriented_incident(table, k - 1) + k * count_oriented_incident(table, k);
        if (lhs != rhs) return differ("k=" + std::to_string(k), lhs, rhs);
      }
      return {};
    });
  }

  if (n >= 4) {
    add("voronoi_strata", [&]() -> std::string {
      for (int k = 1; k < n; ++k) {
        const auto g = build_graph(table, k);
        const auto c = strata_counts(g);
        if (!(c == expected_strata(n, k)))
          return differ("k=" + std::to_string(k), counts_str(c), counts_str(expected_strata(n, k)));
        if (euler_characteristic(g) != 2) return differ("euler k=" + std::to_string(k), euler_characteristic(g), 2);
        if (!is_connected(g)) return "disconnected at k=" + std::to_string(k);
        if (g.regions != enumerate_separable(table, k)) return "regions differ from separable sets at k=" + std::to_string(k);
      }
      return {};
    });

    if (n % 2 == 0) {
      add("antipodal", [&]() -> std::string {
        return antipodal_check(build_graph(table, n / 2)) ? std::string{} : "antipodal map is not a graph automorphism";
      });
    }

    add("gluing", [&]() -> std::string {
      for (int k = 2; k <= n - 1; ++k) {
        const auto g = gluing_counts(config, k);
        if (!g.holds())
          return differ("k=" + std::to_string(k), g.white_vertices, g.interior_low + g.interior_high);
        if (g.white_vertices != strata_counts(build_graph(table, k)).whites)
          return "white vertex count disagrees with the side table at k=" + std::to_string(k);
      }
      return {};
    });
  }

  if (n >= 4 && n <= grid.oracle_max_n) {
    add("oracle_equivalence", [&]() -> std::string {
      for (int k = 1; k < n; ++k) {
        const auto sweep = enumerate_separable(table, k);
        const std::set<DotSet> in_sweep(sweep.begin(), sweep.end());
        for (DotSet s = 1; s < full_set(n); ++s) {
          if (popcount(s) != k) continue;
          if (oracle_separable(config, s) != (in_sweep.count(s) == 1))
            return "subset " + dot_set_label(s) + " disagrees with the oracle";
        }
      }
      return {};
    });
  }

  add("rotation_invariance", [&]() -> std::string {
    const CountSummary base = summarize(table);
    int done = 0;
    for (long q = 1; done < 5 && q < 40; ++q) {
      DotConfig r = config;
      try {
        r = rotate(config, rotation_from_quaternion(q, 2 - q, static_cast<long>(seed % 7) + 1, 3 * q - 1));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::PoleProjection) continue;
        throw;
      }
      if (!(summarize(SideTable(r)) == base)) return "counts changed under rotation " + std::to_string(q);
      ++done;
    }
    return done == 5 ? std::string{} : "too few usable rotations";
  });

  if (n >= 4 && n <= grid.dynamics_max_n) {
    add("dynamics", [&]() -> std::string {
      const int k = n / 2;
      const auto log = move_sequence_with_retry(config, random_config(n, seed + 1000003), k, 8, seed);
      if (!log.endpoints_match) return "endpoint graphs differ";
      for (const auto& e : log.events) {
        if (!(e.counts_before == expected_strata(n, k)) || !(e.counts_after == e.counts_before))
          return "strata counts changed across an event";
        if (n == 2 * k && e.kind != MoveKind::NoOp && !e.antipodal_paired) return "unpaired move at n = 2k";
      }
      return {};
    });
  }
  return out;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerifyReport verify_all(const VerifyGrid& grid) {
  if (grid.n_min < 3 || grid.n_max > kMaxDots || grid.n_min > grid.n_max || grid.seeds < 1)
    throw Error(ErrorCode::UnsupportedSize, "verify grid needs 3 <= n_min <= n_max <= 64 and seeds >= 1");
  const auto t0 = Clock::now();
  std::vector<std::pair<int, std::uint64_t>> cells;
  for (int n = grid.n_min; n <= grid.n_max; ++n)
    for (int s = 0; s < grid.seeds; ++s) cells.emplace_back(n, grid.seed_base + static_cast<std::uint64_t>(s));

  std::vector<std::future<std::vector<CheckResult>>> futures;
  for (const auto& [n, seed] : cells)
    futures.push_back(std::async(grid.parallel ? std::launch::async : std::launch::deferred, run_cell, std::cref(grid),
                                 n, seed));
  VerifyReport report;
  for (auto& f : futures) {
    auto part = f.get();
    report.checks.insert(report.checks.end(), part.begin(), part.end());
  }
  report.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return report;
}

Json verify_report_json(const VerifyReport& report) {
  Json checks = Json::array();
  std::map<std::string, std::pair<int, int>> summary;  // name -> (passed, total)
  for (const auto& c : report.checks) {
    checks.push_back({{"check", c.name}, {"n", c.n}, {"seed", c.seed}, {"pass", c.pass}, {"detail", c.detail},
                      {"millis", c.millis}});
    auto& s = summary[c.name];
    s.first += c.pass;
    ++s.second;
  }
  Json by_check = Json::object();
  for (const auto& [name, s] : summary) by_check[name] = {{"passed", s.first}, {"total", s.second}};
  return Json{{"all_pass", report.all_pass()}, {"millis", report.millis}, {"summary", by_check}, {"checks", checks}};
}

}  // namespace circlesep

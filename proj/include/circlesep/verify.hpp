#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circlesep/io.hpp"
#include "circlesep/side_table.hpp"

namespace circlesep {

struct VerifyGrid {
  int n_min = 4;
  int n_max = 10;
  int seeds = 5;
  std::uint64_t seed_base = 0;
  /// Oracle-vs-sweep is exhaustive over subsets; only run it up to this n.
  int oracle_max_n = 9;
  /// Straight-line families are classified up to this n.
  int dynamics_max_n = 6;
  /// Harness self-test: corrupt the side table used by every table-based check.
  std::optional<SideFault> fault;
  bool parallel = true;
};

struct CheckResult {
  std::string name;
  int n = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string detail;
  double millis = 0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double millis = 0;

  bool all_pass() const;
};

/// Grid cells (n, seed) run concurrently when `parallel`; results are merged
/// in grid order, so the report is deterministic apart from timings.
VerifyReport verify_all(const VerifyGrid& grid);

Json verify_report_json(const VerifyReport& report);

}  // namespace circlesep

#include "circlesep/circles.hpp"

#include <algorithm>
#include <string>

#include "circlesep/error.hpp"

namespace circlesep {

namespace {

void require_k(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi) {
    throw Error(ErrorCode::IndexOutOfRange, std::string(what) + ": k=" + std::to_string(k) + " outside [" +
                                                std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

}  // namespace

std::vector<IncidentRecord> enumerate_incident(const SideTable& table) {
  table.require_general_position();
  std::vector<IncidentRecord> out;
  out.reserve(table.triples().size());
  for (const auto& t : table.triples()) out.push_back({t.triple, popcount(t.left), popcount(t.right)});
  return out;
}

std::vector<IncidentRecord> enumerate_incident(const DotConfig& config) {
  return enumerate_incident(SideTable(config));
}

SideHistogram incident_histogram(const SideTable& table) {
  SideHistogram hist;
  for (const auto& r : enumerate_incident(table)) {
    ++hist[{std::min(r.left_count, r.right_count), std::max(r.left_count, r.right_count)}];
  }
  return hist;
}

SideHistogram incident_histogram(const DotConfig& config) { return incident_histogram(SideTable(config)); }

std::int64_t count_oriented_incident(const SideTable& table, int k) {
  table.require_general_position();
  require_k(k, 0, table.size() - 3, "count_oriented_incident");
  std::int64_t count = 0;
  for (const auto& t : table.triples()) {
    count += (popcount(t.left) == k) + (popcount(t.right) == k);
  }
  return count;
}

std::int64_t count_oriented_incident(const DotConfig& config, int k) {
  return count_oriented_incident(SideTable(config), k);
}

std::int64_t hull_face_count(const SideTable& table) {
  table.require_general_position();
  if (table.size() < 4) throw Error(ErrorCode::SizeMismatch, "hull_face_count needs n >= 4");
  std::int64_t count = 0;
  for (const auto& t : table.triples()) count += (t.left == 0 || t.right == 0);
  return count;
}

std::int64_t hull_face_count(const DotConfig& config) { return hull_face_count(SideTable(config)); }

std::vector<DotSet> enumerate_separable(const SideTable& table, int k) {
  table.require_general_position();
  const int n = table.size();
  if (n < 4) throw Error(ErrorCode::SizeMismatch, "enumerate_separable needs n >= 4");
  require_k(k, 1, n - 1, "enumerate_separable");
  std::vector<DotSet> out;
  for (const auto& t : table.triples()) {
    const std::array<DotSet, 3> members{bit(t.triple[0]), bit(t.triple[1]), bit(t.triple[2])};
    for (unsigned mask = 0; mask < 8; ++mask) {
      DotSet u = 0;
      for (int b = 0; b < 3; ++b)
        if (mask & (1U << b)) u |= members[b];
      if (popcount(t.left | u) == k) out.push_back(t.left | u);
      if (popcount(t.right | u) == k) out.push_back(t.right | u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DotSet> enumerate_separable(const DotConfig& config, int k) {
  return enumerate_separable(SideTable(config), k);
}

std::int64_t avoidant_partition_count(const SideTable& table, int k, int l) {
  const int n = table.size();
  if (k + l != n || k < 1 || l < 1 || n < 4) {
    throw Error(ErrorCode::SizeMismatch, "avoidant_partition_count: need k + l = n >= 4 with k, l >= 1");
  }
  const auto oriented = static_cast<std::int64_t>(enumerate_separable(table, k).size());
  if (k != l) return oriented;
  if (oriented % 2 != 0) {
    throw Error(ErrorCode::InternalInconsistency, "odd number of oriented classes for k = l");
  }
  return oriented / 2;
}

std::int64_t avoidant_partition_count(const DotConfig& config, int k, int l) {
  return avoidant_partition_count(SideTable(config), k, l);
}

std::map<int, std::int64_t> planar_interior_histogram(const DotConfig& config) {
  const SideTable table(config);
  table.require_general_position();
  const SpherePoint p_inf = pole();
  std::map<int, std::int64_t> hist;
  for (const auto& t : table.triples()) {
    const auto& tr = t.triple;
    switch (orient(config.dot(tr[0]), config.dot(tr[1]), config.dot(tr[2]), p_inf)) {
      case Sign::Positive: ++hist[popcount(t.right)]; break;
      case Sign::Negative: ++hist[popcount(t.left)]; break;
      case Sign::Zero:
        throw Error(ErrorCode::NotGeneralPosition, "planar dots " + std::to_string(tr[0] + 1) + "," +
                                                       std::to_string(tr[1] + 1) + "," +
                                                       std::to_string(tr[2] + 1) + " are collinear");
    }
  }
  return hist;
}

std::int64_t incident_formula(int k, int l) {
  return k == l ? std::int64_t{k + 1} * (k + 1) : std::int64_t{2} * (k + 1) * (l + 1);
}

std::int64_t oriented_incident_formula(int k, int n) {
  if (k < 0 || k > n - 3) return 0;
  return std::int64_t{2} * (k + 1) * (n - k - 2);
}

std::int64_t avoidant_formula(int k, int l) {
  return k == l ? std::int64_t{k} * k - k + 1 : std::int64_t{2} * k * l - k - l + 2;
}

std::int64_t separable_formula(int n, int k) {
  return std::int64_t{2} * n * k - std::int64_t{2} * k * k - n + 2;
}

}  // namespace circlesep

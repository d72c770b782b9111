#include "circlesep/side_table.hpp"

#include <bit>
#include <string>

#include "circlesep/error.hpp"

namespace circlesep {

SideTable::SideTable(const DotConfig& config, std::optional<SideFault> fault) : n_(config.size()) {
  const int n = n_;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto& a = config.dot(i);
      const Rational bx = config.dot(j).x() - a.x(), by = config.dot(j).y() - a.y(), bz = config.dot(j).z() - a.z();
      for (int k = j + 1; k < n; ++k) {
        const Rational cx = config.dot(k).x() - a.x(), cy = config.dot(k).y() - a.y(),
                       cz = config.dot(k).z() - a.z();
        const Rational nx = by * cz - bz * cy, ny = bz * cx - bx * cz, nz = bx * cy - by * cx;
        const Rational offset = nx * a.x() + ny * a.y() + nz * a.z();
        TripleSides t{{i, j, k}};
        for (int d = 0; d < n; ++d) {
          if (d == i || d == j || d == k) continue;
          const auto& p = config.dot(d);
          const int s = sgn(nx * p.x() + ny * p.y() + nz * p.z() - offset);
          if (s > 0) {
            t.left |= bit(d);
          } else if (s < 0) {
            t.right |= bit(d);
          } else {
            t.on |= bit(d);
          }
        }
        triples_.push_back(t);
      }
    }
  }
  if (fault && fault->triple_index < triples_.size()) {
    auto& t = triples_[fault->triple_index];
    const DotSet b = bit(fault->dot);
    if (t.left & b) {
      t.left &= ~b;
      t.right |= b;
    } else if (t.right & b) {
      t.right &= ~b;
      t.left |= b;
    }
  }
}

void SideTable::require_general_position() const {
  for (const auto& t : triples_) {
    if (t.on != 0) {
      const int d = std::countr_zero(t.on);
      throw Error(ErrorCode::NotGeneralPosition,
                  "dots " + std::to_string(t.triple[0] + 1) + "," + std::to_string(t.triple[1] + 1) + "," +
                      std::to_string(t.triple[2] + 1) + "," + std::to_string(d + 1) + " are cocircular");
    }
  }
}

}  // namespace circlesep

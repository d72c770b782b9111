#pragma once

#include <optional>
#include <vector>

#include "circlesep/geom.hpp"

namespace circlesep {

/// Sidedness of every dot with respect to every incident circle, for the
/// canonical (increasing-index) orientation of each triple.
struct TripleSides {
  Triple triple;
  DotSet left = 0;
  DotSet right = 0;
  DotSet on = 0;
};

/// Test hook: flips the recorded side of one dot for one triple.
struct SideFault {
  std::size_t triple_index = 0;
  int dot = 0;
};

class SideTable {
 public:
  explicit SideTable(const DotConfig& config, std::optional<SideFault> fault = std::nullopt);

  int size() const { return n_; }
  const std::vector<TripleSides>& triples() const { return triples_; }

  /// Throws Error(NotGeneralPosition) naming a cocircular quadruple, if any.
  void require_general_position() const;

 private:
  int n_;
  std::vector<TripleSides> triples_;
};

/// Strict left set of an oriented triple; `reversed` selects the opposite
/// orientation of the canonical one.
inline DotSet left_set(const TripleSides& t, bool reversed) { return reversed ? t.right : t.left; }

}  // namespace circlesep

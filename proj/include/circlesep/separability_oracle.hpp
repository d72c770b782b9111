#pragma once

#include <array>
#include <vector>

#include "circlesep/geom.hpp"

namespace circlesep {

/// Homogeneous strict system: find y in R^4 with row . y > 0 for every row.
using StrictRow = std::array<Rational, 4>;

/// Exact strict feasibility by Fourier-Motzkin elimination. Derived rows built
/// from more than j + 1 original rows after j eliminations are dropped
/// (Chernikov/Imbert redundancy rule).
bool strictly_feasible(std::vector<StrictRow> rows);

/// Whether some circle has exactly `subset` strictly on one side: a plane
/// (w, c) with w.d > c on the subset and w.d < c off it. Brute force, kept
/// independent of the incident-triple sweep in enumerate_separable.
bool oracle_separable(const DotConfig& config, DotSet subset);

}  // namespace circlesep

// Deterministic chord-count descent over Reidemeister moves.

#pragma once

#include <vector>

#include "vknot/moves.hpp"

namespace vknot {

struct SimplifyResult {
  GaussDiagram diagram;
  std::vector<MoveEvent> trace;
  bool budget_exhausted = false;
};

// Greedy R1/R2 deletions; when none applies, a breadth-first search over R3
// moves looks for a diagram that admits one. `budget` bounds the number of
// diagrams generated in total (each applied or explored move costs one).
SimplifyResult simplify(const GaussDiagram& d, long budget);

}  // namespace vknot

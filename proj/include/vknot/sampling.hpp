// Seeded random diagrams for property checks.

#pragma once

#include <random>
#include <vector>

#include "vknot/moves.hpp"

namespace vknot {

using Rng = std::mt19937_64;

// Uniformly shuffled word of `chords` chords with random signs.
GaussDiagram random_diagram(Rng& rng, int chords, Kind kind);

// A random diagram of `base_chords` chords with one realizable R3 triangle
// (three chords) planted at random gaps.
GaussDiagram random_diagram_with_r3(Rng& rng, int base_chords, Kind kind);

// A uniformly chosen Reidemeister kind among those applicable to d, then a
// uniformly chosen event of that kind. Returns false if none applies.
bool random_reidemeister_move(Rng& rng, const GaussDiagram& d, MoveEvent& out);

int uniform_int(Rng& rng, int lo, int hi);  // inclusive

}  // namespace vknot

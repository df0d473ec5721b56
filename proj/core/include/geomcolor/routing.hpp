#pragma once

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

// Smallest-palette algorithm applicable to (family, k):
//   b-points:       k=2,3 -> 3-color sweep; k>=4 -> 2-color sweep
//   b-rects:        k=2 -> divide-and-color (3); k>=3 -> recursion (2)
//   h-points:       k=2 -> hull/cut coloring (<=4); k>=3 -> 2 colors
//   h-rects:        k=2,3 -> caterpillar (3); k>=4 -> 2 colors
//   bprime-points:  k=2 -> 6; k=3..6 -> 3; k>=7 -> 2
//   bprime-rects:   k>=3 -> 4; k=2 has no known algorithm (rejected)
// Throws std::invalid_argument for k < 2 or an unsupported route.
Coloring run_proper_coloring(const Instance& inst, int k);

// Palette size of the routed algorithm.
int palette_for(Family family, int k);

// The sub-instance induced by `keep` (indices into the instance).
Instance subinstance(const Instance& inst, const std::vector<std::size_t>& keep);

}  // namespace geomcolor

#pragma once

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

// Sweep upwards; each point gets the smallest color differing from both of
// its x-neighbors among the already-processed points. 2-proper against
// bottomless rectangles with 3 colors.
Coloring color_points_b_k2(const std::vector<Point>& pts);

// Sweep upwards keeping two invariants: no two x-adjacent uncolored points,
// and the colored points alternate in color along the x-order. A new point
// stays uncolored unless x-adjacent to an uncolored point, in which case the
// pair is colored to extend the alternation. 4-proper with 2 colors;
// leftovers get color 0.
Coloring color_points_b_k4(const std::vector<Point>& pts);

}  // namespace geomcolor

#pragma once

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

// Four points with one strictly inside the triangle of the other three:
// the unique configuration needing 4 colors against half-planes at k=2.
bool is_pstar(const std::vector<Point>& pts);

// Hull vertices get 3 colors with no two hull-adjacent alike (odd cycles
// close with the third color); every interior point gets color 3.
// 2-proper with 4 colors.
Coloring color_points_h_k2_simple(const std::vector<Point>& pts);

// Refinement using 3 colors away from the exceptional configuration: each
// interior point p is colored avoiding the hull vertices it can be "cut
// out" with — those whose deletion brings p to the hull. On the
// exceptional 4-point set this falls back to 4 distinct colors.
Coloring color_points_h_k2(const std::vector<Point>& pts);

// 2 colors (red=0, blue=1), 3-proper: interior points blue; hull vertex
// q_i red iff the triangle q_{i-1} q_i q_{i+1} contains an input point
// strictly inside; chains between red vertices alternate starting blue.
// No half-plane with exactly two points has both of them blue.
Coloring color_points_h_k3(const std::vector<Point>& pts);

// True iff no half-plane hyperedge of size exactly 2 is entirely color 1.
bool check_obs20(const std::vector<Point>& pts, const Coloring& col);

}  // namespace geomcolor

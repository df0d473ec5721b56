#pragma once

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

// Rectangles crossing the base-line, 3-proper with 4 colors: the part above
// the line and the mirrored part below are each bottomless; color both
// families with the 2-color 3-proper algorithm and pair the colors
// (2*upper + lower).
Coloring color_rects_bprime_k3(const std::vector<BaselineRect>& rects);

// Points against base-line rectangles. Each side of the line (the lower one
// mirrored) reduces to the bottomless point problem.
Coloring color_points_bprime_k2(const std::vector<Point>& pts);  // palette 6, disjoint sides
Coloring color_points_bprime_k3(const std::vector<Point>& pts);  // palette 3, shared
Coloring color_points_bprime_k7(const std::vector<Point>& pts);  // palette 2, shared

}  // namespace geomcolor

#pragma once

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

// 2-proper coloring of bottomless rectangles with 3 colors (red=0, blue=1,
// green=2). Rectangles are inserted by decreasing top edge; a new rectangle
// is red, and whenever it becomes the sole cover of a base-line point the
// divide-and-color recoloring runs: eliminate green single-covered
// intervals on each side, then swap green and red globally. Afterwards no
// single-covered base-line interval is red.
Coloring color_rects_b_k2(const std::vector<BottomlessRect>& rects);

// 3-proper coloring with 2 colors (red=0, blue=1) by recursive case
// analysis on the base-line arrangement; every base-line point covered by
// exactly two rectangles sees both colors.
Coloring color_rects_b_k3(const std::vector<BottomlessRect>& rects);

}  // namespace geomcolor

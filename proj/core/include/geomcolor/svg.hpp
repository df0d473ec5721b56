#pragma once

#include <string>

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

// SVG picture of the instance, color-coded when a coloring is given
// (must match the instance size). Unbounded regions are clipped to the
// bounding box inflated by 20%; bottomless rectangles extend to the clip
// bottom; base-line families show y = 0 dashed.
std::string render_svg(const Instance& inst, const Coloring* coloring = nullptr);

}  // namespace geomcolor

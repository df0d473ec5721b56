#pragma once

#include <cstddef>
#include <vector>

#include "geomcolor/types.hpp"

namespace geomcolor {

// Hull vertices clockwise, starting at the lowest-x vertex. Collinear
// interior-of-edge points are never reported. Singletons and pairs come
// back as themselves; duplicate input points collapse.
std::vector<std::size_t> convex_hull_indices(const std::vector<Point>& pts);
std::vector<Point> convex_hull(const std::vector<Point>& pts);

// Lower (resp. upper) chain of the hull, x-increasing. Endpoints are the
// min-x and max-x points.
std::vector<std::size_t> lower_hull_indices(const std::vector<Point>& pts);
std::vector<std::size_t> upper_hull_indices(const std::vector<Point>& pts);
std::vector<Point> lower_hull(const std::vector<Point>& pts);
std::vector<Point> upper_hull(const std::vector<Point>& pts);

}  // namespace geomcolor

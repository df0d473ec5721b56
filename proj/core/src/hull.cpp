#include "geomcolor/hull.hpp"

#include <algorithm>

#include "geomcolor/predicates.hpp"

namespace geomcolor {
namespace {

// Indices sorted by (x, y), duplicates removed.
std::vector<std::size_t> sorted_unique(const std::vector<Point>& pts) {
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
        return pts[a].y < pts[b].y;
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    return idx;
}

// keep_sign > 0 keeps strict left turns (lower chain of a y-up plane),
// keep_sign < 0 keeps strict right turns (upper chain).
std::vector<std::size_t> chain(const std::vector<Point>& pts,
                               const std::vector<std::size_t>& order, int keep_sign) {
    std::vector<std::size_t> h;
    for (std::size_t i : order) {
        while (h.size() >= 2 &&
               orient_sign(pts[h[h.size() - 2]], pts[h.back()], pts[i]) * keep_sign <= 0) {
            h.pop_back();
        }
        h.push_back(i);
    }
    return h;
}

}  // namespace

std::vector<std::size_t> lower_hull_indices(const std::vector<Point>& pts) {
    return chain(pts, sorted_unique(pts), +1);
}

std::vector<std::size_t> upper_hull_indices(const std::vector<Point>& pts) {
    return chain(pts, sorted_unique(pts), -1);
}

std::vector<std::size_t> convex_hull_indices(const std::vector<Point>& pts) {
    auto order = sorted_unique(pts);
    if (order.size() <= 2) return order;
    auto up = chain(pts, order, -1);
    auto lo = chain(pts, order, +1);
    // Clockwise: across the top left-to-right, back along the bottom.
    std::vector<std::size_t> hull = up;
    for (std::size_t i = lo.size() - 1; i >= 1; --i) {
        if (i == lo.size() - 1) continue;  // max-x endpoint already present
        hull.push_back(lo[i]);
    }
    return hull;
}

namespace {
std::vector<Point> gather(const std::vector<Point>& pts, const std::vector<std::size_t>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(pts[i]);
    return out;
}
}  // namespace

std::vector<Point> convex_hull(const std::vector<Point>& pts) {
    return gather(pts, convex_hull_indices(pts));
}
std::vector<Point> lower_hull(const std::vector<Point>& pts) {
    return gather(pts, lower_hull_indices(pts));
}
std::vector<Point> upper_hull(const std::vector<Point>& pts) {
    return gather(pts, upper_hull_indices(pts));
}

}  // namespace geomcolor

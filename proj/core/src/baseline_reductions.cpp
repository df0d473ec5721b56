#include "geomcolor/baseline_reductions.hpp"

#include <stdexcept>

#include "geomcolor/bottomless_dual.hpp"
#include "geomcolor/bottomless_primal.hpp"
#include "geomcolor/general_position.hpp"

namespace geomcolor {
namespace {

void require_baseline_points(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    Instance inst;
    inst.family = Family::bprime_points;
    inst.points = pts;
    require_general_position(inst);
}

// Colors each side of the base-line independently with `algo` (the lower
// side vertically mirrored first) and writes side colors back, the lower
// side offset by `lower_offset`.
template <typename Algo>
std::vector<int> color_sides(const std::vector<Point>& pts, Algo&& algo, int lower_offset) {
    std::vector<Point> upper, lower;
    std::vector<std::size_t> ui, li;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].y > 0) {
            upper.push_back(pts[i]);
            ui.push_back(i);
        } else {
            lower.push_back(Point{pts[i].x, Rat(-pts[i].y)});
            li.push_back(i);
        }
    }
    std::vector<int> colors(pts.size(), 0);
    if (!upper.empty()) {
        auto c = algo(upper);
        for (std::size_t t = 0; t < ui.size(); ++t) colors[ui[t]] = c.colors[t];
    }
    if (!lower.empty()) {
        auto c = algo(lower);
        for (std::size_t t = 0; t < li.size(); ++t) colors[li[t]] = c.colors[t] + lower_offset;
    }
    return colors;
}

}  // namespace

Coloring color_rects_bprime_k3(const std::vector<BaselineRect>& rects) {
    if (rects.empty()) throw std::invalid_argument("empty rectangle family");
    Instance inst;
    inst.family = Family::bprime_rects;
    inst.baseline_rects = rects;
    require_general_position(inst);

    std::vector<BottomlessRect> upper, lower;
    for (const auto& r : rects) {
        upper.push_back({r.a, r.b, r.top});
        lower.push_back({r.a, r.b, Rat(-r.bottom)});
    }
    auto cu = color_rects_b_k3(upper);
    auto cl = color_rects_b_k3(lower);
    std::vector<int> colors(rects.size());
    for (std::size_t i = 0; i < rects.size(); ++i) {
        colors[i] = 2 * cu.colors[i] + cl.colors[i];
    }
    return Coloring{4, std::move(colors)};
}

Coloring color_points_bprime_k2(const std::vector<Point>& pts) {
    require_baseline_points(pts);
    return Coloring{6, color_sides(pts, color_points_b_k2, 3)};
}

Coloring color_points_bprime_k3(const std::vector<Point>& pts) {
    require_baseline_points(pts);
    return Coloring{3, color_sides(pts, color_points_b_k2, 0)};
}

Coloring color_points_bprime_k7(const std::vector<Point>& pts) {
    require_baseline_points(pts);
    return Coloring{2, color_sides(pts, color_points_b_k4, 0)};
}

}  // namespace geomcolor

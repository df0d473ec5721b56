#include "geomcolor/bottomless_primal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "geomcolor/general_position.hpp"

namespace geomcolor {
namespace {

std::vector<std::size_t> y_order(const std::vector<Point>& pts) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a].y < pts[b].y; });
    return order;
}

void require_points(const std::vector<Point>& pts, Family f) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    Instance inst;
    inst.family = f;
    inst.points = pts;
    require_general_position(inst);
}

}  // namespace

Coloring color_points_b_k2(const std::vector<Point>& pts) {
    require_points(pts, Family::b_points);
    std::vector<int> colors(pts.size(), 0);
    std::map<Rat, int> by_x;  // processed points: x -> color
    for (std::size_t v : y_order(pts)) {
        auto next = by_x.lower_bound(pts[v].x);
        bool used[3] = {false, false, false};
        if (next != by_x.end()) used[next->second] = true;
        if (next != by_x.begin()) used[std::prev(next)->second] = true;
        int c = 0;
        while (used[c]) ++c;
        colors[v] = c;
        by_x.emplace(pts[v].x, c);
    }
    return Coloring{3, std::move(colors)};
}

Coloring color_points_b_k4(const std::vector<Point>& pts) {
    require_points(pts, Family::b_points);
    constexpr int uncolored = -1;
    std::vector<int> colors(pts.size(), uncolored);
    std::map<Rat, std::size_t> all;      // every processed point, by x
    std::map<Rat, std::size_t> colored;  // the colored subsequence, by x
    auto assign = [&](std::size_t v, int c) {
        colors[v] = c;
        colored.emplace(pts[v].x, v);
    };
    bool first = true;
    for (std::size_t v : y_order(pts)) {
        auto pos = all.emplace(pts[v].x, v).first;
        if (first) {
            assign(v, 0);
            first = false;
            continue;
        }
        // At most one x-neighbor can be uncolored (uncolored points are
        // never adjacent before the insertion).
        std::size_t mate = v;
        bool found = false;
        if (pos != all.begin() && colors[std::prev(pos)->second] == uncolored) {
            mate = std::prev(pos)->second;
            found = true;
        } else if (std::next(pos) != all.end() &&
                   colors[std::next(pos)->second] == uncolored) {
            mate = std::next(pos)->second;
            found = true;
        }
        if (!found) continue;
        // Color the pair {mate, v} so the colored points still alternate.
        std::size_t lo = pts[mate].x < pts[v].x ? mate : v;
        std::size_t hi = lo == mate ? v : mate;
        auto right = colored.upper_bound(pts[hi].x);
        bool has_right = right != colored.end();
        bool has_left = right != colored.begin();
        if (has_left && has_right) {
            assign(lo, 1 - colors[std::prev(right)->second]);
            assign(hi, 1 - colors[right->second]);
        } else if (has_left) {
            int a = colors[std::prev(right)->second];
            assign(lo, 1 - a);
            assign(hi, a);
        } else if (has_right) {
            int b = colors[right->second];
            assign(lo, b);
            assign(hi, 1 - b);
        } else {
            assign(lo, 0);
            assign(hi, 1);
        }
    }
    for (auto& c : colors) {
        if (c == uncolored) c = 0;
    }
    return Coloring{2, std::move(colors)};
}

}  // namespace geomcolor

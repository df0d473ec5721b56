#include "geomcolor/halfplane_primal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "geomcolor/general_position.hpp"
#include "geomcolor/hull.hpp"
#include "geomcolor/predicates.hpp"

namespace geomcolor {
namespace {

constexpr int red = 0, blue = 1;

void require_points(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("empty point set");
    Instance inst;
    inst.family = Family::h_points;
    inst.points = pts;
    require_general_position(inst);
}

// 3-coloring of the hull cycle with no two adjacent alike.
std::vector<int> hull_cycle_colors(std::size_t k) {
    std::vector<int> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<int>(i % 2);
    if (k >= 3 && k % 2 == 1) c[k - 1] = 2;
    return c;
}

// Strictly inside the clockwise triangle (a, b, c)?
bool strictly_inside(const Point& a, const Point& b, const Point& c, const Point& p) {
    return orient_sign(a, b, p) < 0 && orient_sign(b, c, p) < 0 && orient_sign(c, a, p) < 0;
}

}  // namespace

bool is_pstar(const std::vector<Point>& pts) {
    if (pts.size() != 4) return false;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Point> tri;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != i) tri.push_back(pts[j]);
        }
        if (orient_sign(tri[0], tri[1], tri[2]) > 0) std::swap(tri[1], tri[2]);
        if (strictly_inside(tri[0], tri[1], tri[2], pts[i])) return true;
    }
    return false;
}

Coloring color_points_h_k2_simple(const std::vector<Point>& pts) {
    require_points(pts);
    std::vector<int> colors(pts.size(), 3);
    auto hull = convex_hull_indices(pts);
    auto hc = hull_cycle_colors(hull.size());
    for (std::size_t i = 0; i < hull.size(); ++i) colors[hull[i]] = hc[i];
    return Coloring{4, std::move(colors)};
}

Coloring color_points_h_k2(const std::vector<Point>& pts) {
    require_points(pts);
    if (is_pstar(pts)) return color_points_h_k2_simple(pts);

    std::vector<int> colors(pts.size(), -1);
    auto hull = convex_hull_indices(pts);
    auto hc = hull_cycle_colors(hull.size());
    std::set<std::size_t> on_hull(hull.begin(), hull.end());
    for (std::size_t i = 0; i < hull.size(); ++i) colors[hull[i]] = hc[i];

    // cut_colors[p] = colors of hull vertices whose deletion exposes p
    std::vector<std::set<int>> cut_colors(pts.size());
    for (std::size_t hi = 0; hi < hull.size(); ++hi) {
        std::vector<Point> rest;
        std::vector<std::size_t> back;  // position in pts
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j != hull[hi]) {
                rest.push_back(pts[j]);
                back.push_back(j);
            }
        }
        for (std::size_t v : convex_hull_indices(rest)) {
            std::size_t orig = back[v];
            if (!on_hull.count(orig)) cut_colors[orig].insert(hc[hi]);
        }
    }
    for (std::size_t j = 0; j < pts.size(); ++j) {
        if (colors[j] >= 0) continue;
        int c = 0;
        while (c < 3 && cut_colors[j].count(c)) ++c;
        if (c == 3) throw std::logic_error("interior point cuttable with all three colors");
        colors[j] = c;
    }
    return Coloring{4, std::move(colors)};
}

Coloring color_points_h_k3(const std::vector<Point>& pts) {
    require_points(pts);
    std::vector<int> colors(pts.size(), blue);
    auto hull = convex_hull_indices(pts);
    const std::size_t k = hull.size();
    std::set<std::size_t> on_hull(hull.begin(), hull.end());

    std::vector<bool> is_red(k, false);
    bool any_red = false;
    if (k >= 3) {
        for (std::size_t i = 0; i < k; ++i) {
            const Point& a = pts[hull[(i + k - 1) % k]];
            const Point& b = pts[hull[i]];
            const Point& c = pts[hull[(i + 1) % k]];
            for (std::size_t j = 0; j < pts.size() && !is_red[i]; ++j) {
                if (strictly_inside(a, b, c, pts[j])) is_red[i] = true;
            }
            any_red = any_red || is_red[i];
        }
    }

    if (!any_red) {
        // plain alternation; an odd cycle closes with two adjacent reds
        for (std::size_t i = 0; i < k; ++i) colors[hull[i]] = i % 2 == 0 ? red : blue;
    } else {
        for (std::size_t i = 0; i < k; ++i) {
            if (is_red[i]) colors[hull[i]] = red;
        }
        // chains of non-red vertices alternate starting blue after each red
        for (std::size_t i = 0; i < k; ++i) {
            if (!is_red[i] || is_red[(i + 1) % k]) continue;
            int next = blue;
            for (std::size_t j = (i + 1) % k; !is_red[j]; j = (j + 1) % k) {
                colors[hull[j]] = next;
                next = next == blue ? red : blue;
            }
        }
    }
    for (std::size_t i = 0; i < k && k > 1; ++i) {
        if (colors[hull[i]] == blue && colors[hull[(i + 1) % k]] == blue) {
            throw std::logic_error("two adjacent blue hull vertices");
        }
    }
    return Coloring{2, std::move(colors)};
}

bool check_obs20(const std::vector<Point>& pts, const Coloring& col) {
    const std::size_t n = pts.size();
    auto all_blue = [&](std::initializer_list<std::size_t> e) {
        return std::all_of(e.begin(), e.end(),
                           [&](std::size_t v) { return col.colors[v] == blue; });
    };
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            std::vector<std::size_t> side[2];
            for (std::size_t r = 0; r < n; ++r) {
                if (r == p || r == q) continue;
                auto& s = side[orient_sign(pts[p], pts[q], pts[r]) > 0 ? 0 : 1];
                if (s.size() < 3) s.push_back(r);
            }
            for (const auto& s : side) {
                bool bad = false;
                switch (s.size()) {
                    case 0: bad = all_blue({p, q}); break;
                    case 1: bad = all_blue({s[0], p}) || all_blue({s[0], q}); break;
                    case 2: bad = all_blue({s[0], s[1]}); break;
                    default: break;
                }
                if (bad) return false;
            }
        }
    }
    return true;
}

}  // namespace geomcolor

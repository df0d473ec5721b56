#include "geomcolor/general_position.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "geomcolor/predicates.hpp"

namespace geomcolor {
namespace {

// First pair of equal values in (value, owner-index) order, if any.
std::optional<GpViolation> find_tie(const std::vector<std::pair<Rat, std::size_t>>& vals,
                                    const std::string& what) {
    auto sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].first == sorted[i - 1].first) {
            return GpViolation{{sorted[i - 1].second, sorted[i].second}, "duplicate " + what};
        }
    }
    return std::nullopt;
}

// Duplicate points and collinear triples in O(n^2 log n) by sorting, per
// anchor, the directions towards all later points.
std::optional<GpViolation> find_collinear(const std::vector<Point>& pts) {
    {
        std::vector<std::size_t> idx(pts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
            return pts[a].y < pts[b].y;
        });
        for (std::size_t t = 1; t < idx.size(); ++t) {
            if (pts[idx[t - 1]] == pts[idx[t]]) {
                return GpViolation{{std::min(idx[t - 1], idx[t]), std::max(idx[t - 1], idx[t])},
                                   "duplicate point"};
            }
        }
    }
    struct Dir {
        bool vertical;
        Rat slope;
        std::size_t j;
    };
    std::vector<Dir> dirs;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        dirs.clear();
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Rat dx = pts[j].x - pts[i].x;
            if (dx == 0) dirs.push_back({true, 0, j});
            else dirs.push_back({false, (pts[j].y - pts[i].y) / dx, j});
        }
        std::sort(dirs.begin(), dirs.end(), [](const Dir& a, const Dir& b) {
            if (a.vertical != b.vertical) return a.vertical < b.vertical;
            return a.slope < b.slope;
        });
        for (std::size_t t = 1; t < dirs.size(); ++t) {
            if (dirs[t - 1].vertical == dirs[t].vertical &&
                (dirs[t].vertical || dirs[t - 1].slope == dirs[t].slope)) {
                return GpViolation{{i, dirs[t - 1].j, dirs[t].j}, "collinear points"};
            }
        }
    }
    return std::nullopt;
}

std::vector<Point> dual_positions(const std::vector<HalfPlane>& hs) {
    std::vector<Point> pts;
    pts.reserve(hs.size());
    for (const auto& h : hs) pts.push_back(Point{h.slope, h.intercept});
    return pts;
}

// Smallest positive gap among the values; 1 when all values coincide.
Rat min_gap(std::vector<Rat> vals) {
    std::sort(vals.begin(), vals.end());
    Rat gap = 0;
    for (std::size_t i = 1; i < vals.size(); ++i) {
        Rat d = vals[i] - vals[i - 1];
        if (d > 0 && (gap == 0 || d < gap)) gap = d;
    }
    return gap == 0 ? Rat(1) : gap;
}

// Adds i*eps to the i-th value (1-based, input order). eps is small enough
// that the strict order of distinct values is preserved, ties split, and
// no value crosses any entry of `anchors` it does not already equal.
void spread(std::vector<Rat*> slots, const std::vector<Rat>& anchors) {
    std::vector<Rat> vals = anchors;
    for (auto* s : slots) vals.push_back(*s);
    Rat eps = min_gap(std::move(vals)) / Rat(4 * (slots.size() + 1));
    Rat i = 1;
    for (auto* s : slots) {
        *s += i * eps;
        i += 1;
    }
}

Instance perturb_moment_curve(const Instance& inst) {
    Instance out = inst;
    Rat eps = 1;
    for (int iter = 0; iter < 512; ++iter) {
        out = inst;
        Rat i = 0;
        if (inst.family == Family::h_points) {
            for (auto& p : out.points) {
                p.x += i * eps;
                p.y += i * i * eps * eps;
                i += 1;
            }
        } else {
            for (auto& h : out.halfplanes) {
                h.slope += i * eps;
                h.intercept += i * i * eps * eps;
                i += 1;
            }
        }
        if (!validate_general_position(out)) return out;
        eps /= 2;
    }
    throw std::logic_error("perturbation did not converge");
}

}  // namespace

std::optional<GpViolation> validate_general_position(const Instance& inst) {
    switch (inst.family) {
        case Family::b_points:
        case Family::bprime_points: {
            std::vector<std::pair<Rat, std::size_t>> xs, ys;
            for (std::size_t i = 0; i < inst.points.size(); ++i) {
                if (inst.family == Family::bprime_points && inst.points[i].y == 0) {
                    return GpViolation{{i}, "point on the base-line"};
                }
                xs.emplace_back(inst.points[i].x, i);
                ys.emplace_back(inst.points[i].y, i);
            }
            if (auto v = find_tie(xs, "x-coordinate")) return v;
            return find_tie(ys, "y-coordinate");
        }
        case Family::b_rects: {
            std::vector<std::pair<Rat, std::size_t>> edges, tops;
            for (std::size_t i = 0; i < inst.rects.size(); ++i) {
                const auto& r = inst.rects[i];
                if (!(r.a < r.b)) return GpViolation{{i}, "empty rectangle (a >= b)"};
                edges.emplace_back(r.a, i);
                edges.emplace_back(r.b, i);
                tops.emplace_back(r.c, i);
            }
            if (auto v = find_tie(edges, "edge x-coordinate")) return v;
            return find_tie(tops, "top y-coordinate");
        }
        case Family::bprime_rects: {
            std::vector<std::pair<Rat, std::size_t>> edges, tops, bottoms;
            for (std::size_t i = 0; i < inst.baseline_rects.size(); ++i) {
                const auto& r = inst.baseline_rects[i];
                if (!(r.a < r.b)) return GpViolation{{i}, "empty rectangle (a >= b)"};
                if (!(r.bottom < 0 && 0 < r.top)) {
                    return GpViolation{{i}, "rectangle does not cross the base-line"};
                }
                edges.emplace_back(r.a, i);
                edges.emplace_back(r.b, i);
                tops.emplace_back(r.top, i);
                bottoms.emplace_back(r.bottom, i);
            }
            if (auto v = find_tie(edges, "edge x-coordinate")) return v;
            if (auto v = find_tie(tops, "top y-coordinate")) return v;
            return find_tie(bottoms, "bottom y-coordinate");
        }
        case Family::h_points: return find_collinear(inst.points);
        case Family::h_rects: {
            auto duals = dual_positions(inst.halfplanes);
            for (std::size_t i = 0; i < duals.size(); ++i) {
                for (std::size_t j = i + 1; j < duals.size(); ++j) {
                    if (duals[i] == duals[j]) {
                        return GpViolation{{i, j}, "identical boundary lines"};
                    }
                }
            }
            auto v = find_collinear(duals);
            if (v) v->reason = "concurrent boundary configuration (collinear duals)";
            return v;
        }
    }
    return std::nullopt;
}

Instance perturb(const Instance& inst) {
    if (!validate_general_position(inst)) return inst;

    switch (inst.family) {
        case Family::b_points:
        case Family::bprime_points: {
            Instance out = inst;
            std::vector<Rat*> xs, ys;
            for (auto& p : out.points) {
                xs.push_back(&p.x);
                ys.push_back(&p.y);
            }
            // Anchoring y at 0 keeps bprime points on their side of the base-line.
            std::vector<Rat> y_anchor =
                inst.family == Family::bprime_points ? std::vector<Rat>{0} : std::vector<Rat>{};
            spread(xs, {});
            spread(ys, y_anchor);
            return out;
        }
        case Family::b_rects: {
            Instance out = inst;
            std::vector<Rat*> edges, tops;
            for (auto& r : out.rects) {
                edges.push_back(&r.a);
                edges.push_back(&r.b);
                tops.push_back(&r.c);
            }
            spread(edges, {});
            spread(tops, {});
            return out;
        }
        case Family::bprime_rects: {
            Instance out = inst;
            std::vector<Rat*> edges, tops, bottoms;
            for (auto& r : out.baseline_rects) {
                edges.push_back(&r.a);
                edges.push_back(&r.b);
                tops.push_back(&r.top);
                bottoms.push_back(&r.bottom);
            }
            spread(edges, {});
            spread(tops, {0});
            spread(bottoms, {0});
            return out;
        }
        case Family::h_points:
        case Family::h_rects: return perturb_moment_curve(inst);
    }
    return inst;
}

}  // namespace geomcolor

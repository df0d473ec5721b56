#include "geomcolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "geomcolor/general_position.hpp"
#include "geomcolor/hull.hpp"
#include "geomcolor/predicates.hpp"

namespace geomcolor {
namespace {

using Edge = std::vector<std::size_t>;

struct EdgeSet {
    std::size_t n;
    std::set<Edge> edges;

    explicit EdgeSet(std::size_t n_) : n(n_) {}

    void add(Edge e) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (!e.empty()) edges.insert(std::move(e));
    }

    Hypergraph finish() const {
        Hypergraph h;
        h.vertex_count = n;
        h.edges.assign(edges.begin(), edges.end());
        return h;
    }
};

std::vector<Rat> sorted_distinct(std::vector<Rat> vals) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

// One sample strictly inside every gap of the sorted distinct values, plus
// one below and one above everything. `parts` > 1 yields parts-1 interior
// samples per gap (a strictly finer grid for the naive cross-checks).
std::vector<Rat> gap_samples(std::vector<Rat> vals, int parts = 2) {
    vals = sorted_distinct(std::move(vals));
    std::vector<Rat> out;
    if (vals.empty()) {
        out.push_back(0);
        return out;
    }
    out.push_back(vals.front() - 1);
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
        for (int t = 1; t < parts; ++t) {
            out.push_back(vals[i] + (vals[i + 1] - vals[i]) * t / parts);
        }
    }
    out.push_back(vals.back() + 1);
    return out;
}

std::vector<std::size_t> by_x(const std::vector<Point>& pts) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });
    return order;
}

void require(const Instance& inst) { require_general_position(inst); }

Instance wrap(Family f, std::vector<Point> pts) {
    Instance i;
    i.family = f;
    i.points = std::move(pts);
    return i;
}

// ---- exact convex-hull disjointness (naive half-plane separability) ----

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orient_sign(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient_sign(a, b, c), o2 = orient_sign(a, b, d);
    int o3 = orient_sign(c, d, a), o4 = orient_sign(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

// Closed membership in a clockwise convex polygon (point/segment degenerate
// hulls included).
bool in_closed_hull(const std::vector<Point>& hull, const Point& p) {
    if (hull.size() == 1) return hull[0] == p;
    if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (orient_sign(hull[i], hull[(i + 1) % hull.size()], p) > 0) return false;
    }
    return true;
}

std::vector<std::pair<Point, Point>> hull_segments(const std::vector<Point>& hull) {
    std::vector<std::pair<Point, Point>> segs;
    if (hull.size() == 2) segs.emplace_back(hull[0], hull[1]);
    if (hull.size() >= 3) {
        for (std::size_t i = 0; i < hull.size(); ++i) {
            segs.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
        }
    }
    return segs;
}

// Compact convex sets are strictly separable iff disjoint, so an open
// half-plane realizes S exactly when the two closed hulls are disjoint.
bool hulls_disjoint(const std::vector<Point>& a, const std::vector<Point>& b) {
    auto ha = convex_hull(a), hb = convex_hull(b);
    for (const auto& p : a) {
        if (in_closed_hull(hb, p)) return false;
    }
    for (const auto& p : b) {
        if (in_closed_hull(ha, p)) return false;
    }
    for (const auto& [a1, a2] : hull_segments(ha)) {
        for (const auto& [b1, b2] : hull_segments(hb)) {
            if (segments_intersect(a1, a2, b1, b2)) return false;
        }
    }
    return true;
}

// ---- half-plane dual arrangement sampling ----

struct LineVertex {
    Point p;
    std::size_t la, lb;
};

std::vector<LineVertex> arrangement_vertices(const std::vector<HalfPlane>& hs) {
    std::vector<LineVertex> vs;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            if (hs[i].slope == hs[j].slope) continue;
            Rat x = (hs[j].intercept - hs[i].intercept) / (hs[i].slope - hs[j].slope);
            vs.push_back({Point{x, hs[i].boundary_at(x)}, i, j});
        }
    }
    return vs;
}

void add_cover(EdgeSet& out, const std::vector<HalfPlane>& hs, const Point& p) {
    Edge e;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (hs[i].contains(p)) e.push_back(i);
    }
    out.add(std::move(e));
}

}  // namespace

Hypergraph enumerate_primal_bottomless(const std::vector<Point>& pts) {
    require(wrap(Family::b_points, pts));
    EdgeSet out(pts.size());
    auto order = by_x(pts);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i; j < order.size(); ++j) {
            for (std::size_t m = i; m <= j; ++m) {
                Edge e;
                for (std::size_t t = i; t <= j; ++t) {
                    if (pts[order[t]].y <= pts[order[m]].y) e.push_back(order[t]);
                }
                out.add(std::move(e));
            }
        }
    }
    return out.finish();
}

Hypergraph enumerate_primal_bottomless_naive(const std::vector<Point>& pts) {
    require(wrap(Family::b_points, pts));
    EdgeSet out(pts.size());
    std::vector<Rat> xs, ys;
    for (const auto& p : pts) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    auto ab = gap_samples(xs);
    auto cs = gap_samples(ys);
    for (std::size_t i = 0; i < ab.size(); ++i) {
        for (std::size_t j = i + 1; j < ab.size(); ++j) {
            for (const auto& c : cs) {
                BottomlessRect r{ab[i], ab[j], c};
                Edge e;
                for (std::size_t t = 0; t < pts.size(); ++t) {
                    if (r.contains(pts[t])) e.push_back(t);
                }
                out.add(std::move(e));
            }
        }
    }
    return out.finish();
}

Hypergraph enumerate_primal_halfplane(const std::vector<Point>& pts) {
    require(wrap(Family::h_points, pts));
    EdgeSet out(pts.size());
    Edge all(pts.size());
    std::iota(all.begin(), all.end(), 0);
    out.add(all);
    for (std::size_t p = 0; p < pts.size(); ++p) {
        for (std::size_t q = 0; q < pts.size(); ++q) {
            if (p == q) continue;
            Edge left;
            for (std::size_t r = 0; r < pts.size(); ++r) {
                if (r != p && r != q && orient_sign(pts[p], pts[q], pts[r]) > 0) {
                    left.push_back(r);
                }
            }
            // The supporting line through p,q admits a small rotation or
            // shift realizing each way of keeping/dropping p and q.
            out.add(left);
            Edge lp = left;
            lp.push_back(p);
            out.add(lp);
            Edge lq = left;
            lq.push_back(q);
            out.add(lq);
            lp.push_back(q);
            out.add(std::move(lp));
        }
    }
    return out.finish();
}

Hypergraph enumerate_primal_halfplane_naive(const std::vector<Point>& pts) {
    require(wrap(Family::h_points, pts));
    if (pts.size() > 20) throw std::invalid_argument("naive half-plane oracle: n too large");
    EdgeSet out(pts.size());
    for (std::size_t mask = 1; mask < (std::size_t{1} << pts.size()); ++mask) {
        std::vector<Point> in, rest;
        Edge e;
        for (std::size_t t = 0; t < pts.size(); ++t) {
            if (mask >> t & 1) {
                in.push_back(pts[t]);
                e.push_back(t);
            } else {
                rest.push_back(pts[t]);
            }
        }
        if (rest.empty() || hulls_disjoint(in, rest)) out.add(std::move(e));
    }
    return out.finish();
}

Hypergraph enumerate_primal_baseline(const std::vector<Point>& pts) {
    require(wrap(Family::bprime_points, pts));
    EdgeSet out(pts.size());
    auto order = by_x(pts);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i; j < order.size(); ++j) {
            std::vector<std::size_t> above, below;
            for (std::size_t t = i; t <= j; ++t) {
                (pts[order[t]].y > 0 ? above : below).push_back(order[t]);
            }
            // Independent thresholds for the two sides of the base-line:
            // everything up to the chosen above point, everything down to
            // the chosen below point (either side possibly empty).
            for (std::size_t ai = 0; ai <= above.size(); ++ai) {
                for (std::size_t bi = 0; bi <= below.size(); ++bi) {
                    Edge e;
                    if (ai > 0) {
                        const Rat& cap = pts[above[ai - 1]].y;
                        for (std::size_t v : above) {
                            if (pts[v].y <= cap) e.push_back(v);
                        }
                    }
                    if (bi > 0) {
                        const Rat& floor = pts[below[bi - 1]].y;
                        for (std::size_t v : below) {
                            if (pts[v].y >= floor) e.push_back(v);
                        }
                    }
                    out.add(std::move(e));
                }
            }
        }
    }
    return out.finish();
}

Hypergraph enumerate_primal_baseline_naive(const std::vector<Point>& pts) {
    require(wrap(Family::bprime_points, pts));
    EdgeSet out(pts.size());
    std::vector<Rat> xs, pos{0}, neg{0};
    for (const auto& p : pts) {
        xs.push_back(p.x);
        (p.y > 0 ? pos : neg).push_back(p.y);
    }
    auto ab = gap_samples(xs);
    auto tops = gap_samples(pos);
    auto bottoms = gap_samples(neg);
    std::erase_if(tops, [](const Rat& v) { return v <= 0; });
    std::erase_if(bottoms, [](const Rat& v) { return v >= 0; });
    for (std::size_t i = 0; i < ab.size(); ++i) {
        for (std::size_t j = i + 1; j < ab.size(); ++j) {
            for (const auto& top : tops) {
                for (const auto& bottom : bottoms) {
                    BaselineRect r{ab[i], ab[j], bottom, top};
                    Edge e;
                    for (std::size_t t = 0; t < pts.size(); ++t) {
                        if (r.contains(pts[t])) e.push_back(t);
                    }
                    out.add(std::move(e));
                }
            }
        }
    }
    return out.finish();
}

namespace {

Hypergraph dual_bottomless_grid(const std::vector<BottomlessRect>& rects, int parts) {
    EdgeSet out(rects.size());
    std::vector<Rat> xs, tops;
    for (const auto& r : rects) {
        xs.push_back(r.a);
        xs.push_back(r.b);
        tops.push_back(r.c);
    }
    for (const auto& x : gap_samples(xs, parts)) {
        for (const auto& y : gap_samples(tops, parts)) {
            Edge e;
            for (std::size_t i = 0; i < rects.size(); ++i) {
                if (rects[i].contains(Point{x, y})) e.push_back(i);
            }
            out.add(std::move(e));
        }
    }
    return out.finish();
}

Hypergraph dual_baseline_grid(const std::vector<BaselineRect>& rects, int parts) {
    EdgeSet out(rects.size());
    std::vector<Rat> xs, ys;
    for (const auto& r : rects) {
        xs.push_back(r.a);
        xs.push_back(r.b);
        ys.push_back(r.top);
        ys.push_back(r.bottom);
    }
    for (const auto& x : gap_samples(xs, parts)) {
        for (const auto& y : gap_samples(ys, parts)) {
            Edge e;
            for (std::size_t i = 0; i < rects.size(); ++i) {
                if (rects[i].contains(Point{x, y})) e.push_back(i);
            }
            out.add(std::move(e));
        }
    }
    return out.finish();
}

}  // namespace

Hypergraph enumerate_dual_bottomless(const std::vector<BottomlessRect>& rects) {
    Instance inst;
    inst.family = Family::b_rects;
    inst.rects = rects;
    require(inst);
    return dual_bottomless_grid(rects, 2);
}

Hypergraph enumerate_dual_bottomless_naive(const std::vector<BottomlessRect>& rects) {
    Instance inst;
    inst.family = Family::b_rects;
    inst.rects = rects;
    require(inst);
    return dual_bottomless_grid(rects, 3);
}

Hypergraph enumerate_dual_baseline(const std::vector<BaselineRect>& rects) {
    Instance inst;
    inst.family = Family::bprime_rects;
    inst.baseline_rects = rects;
    require(inst);
    return dual_baseline_grid(rects, 2);
}

Hypergraph enumerate_dual_baseline_naive(const std::vector<BaselineRect>& rects) {
    Instance inst;
    inst.family = Family::bprime_rects;
    inst.baseline_rects = rects;
    require(inst);
    return dual_baseline_grid(rects, 3);
}

Hypergraph enumerate_dual_halfplane(const std::vector<HalfPlane>& hs) {
    Instance inst;
    inst.family = Family::h_rects;
    inst.halfplanes = hs;
    require(inst);
    EdgeSet out(hs.size());

    // One sample inside each of the four cells around every arrangement
    // vertex (no three boundaries are concurrent in general position), at a
    // radius small enough to stay clear of every other line.
    auto verts = arrangement_vertices(hs);
    Rat max_abs_slope = 0;
    for (const auto& h : hs) {
        Rat s = abs(h.slope);
        if (s > max_abs_slope) max_abs_slope = s;
    }
    for (const auto& v : verts) {
        Rat dvert = 0;
        for (std::size_t l = 0; l < hs.size(); ++l) {
            if (l == v.la || l == v.lb) continue;
            Rat d = abs(v.p.y - hs[l].boundary_at(v.p.x));
            if (dvert == 0 || d < dvert) dvert = d;
        }
        if (dvert == 0) dvert = 1;  // no third line at all
        Rat mid = (hs[v.la].slope + hs[v.lb].slope) / 2;
        Rat t = dvert / (2 * (abs(mid) + max_abs_slope + 1));
        Rat dy = dvert / 2;
        add_cover(out, hs, Point{v.p.x + t, v.p.y + t * mid});
        add_cover(out, hs, Point{v.p.x - t, v.p.y - t * mid});
        add_cover(out, hs, Point{v.p.x, v.p.y + dy});
        add_cover(out, hs, Point{v.p.x, v.p.y - dy});
    }

    // Far-field columns catch cells bounded only by mutually parallel lines.
    Rat far = 1;
    for (const auto& v : verts) {
        Rat c = abs(v.p.x) + 1;
        if (c > far) far = c;
    }
    for (const Rat& x : {far, Rat(-far)}) {
        std::vector<Rat> vals;
        for (const auto& h : hs) vals.push_back(h.boundary_at(x));
        for (const auto& y : gap_samples(vals)) add_cover(out, hs, Point{x, y});
    }
    return out.finish();
}

Hypergraph enumerate_dual_halfplane_naive(const std::vector<HalfPlane>& hs) {
    Instance inst;
    inst.family = Family::h_rects;
    inst.halfplanes = hs;
    require(inst);
    EdgeSet out(hs.size());

    // Vertical slab decomposition: one column strictly inside every slab
    // between consecutive vertex abscissae, sampling every cell it meets.
    std::vector<Rat> vx;
    for (const auto& v : arrangement_vertices(hs)) vx.push_back(v.p.x);
    for (const auto& x : gap_samples(vx)) {
        std::vector<Rat> vals;
        for (const auto& h : hs) vals.push_back(h.boundary_at(x));
        for (const auto& y : gap_samples(vals)) add_cover(out, hs, Point{x, y});
    }
    return out.finish();
}

Hypergraph enumerate_hyperedges(const Instance& inst) {
    switch (inst.family) {
        case Family::b_points: return enumerate_primal_bottomless(inst.points);
        case Family::h_points: return enumerate_primal_halfplane(inst.points);
        case Family::bprime_points: return enumerate_primal_baseline(inst.points);
        case Family::b_rects: return enumerate_dual_bottomless(inst.rects);
        case Family::h_rects: return enumerate_dual_halfplane(inst.halfplanes);
        case Family::bprime_rects: return enumerate_dual_baseline(inst.baseline_rects);
    }
    throw std::logic_error("bad family");
}

bool check_monotonicity(const Hypergraph& h) {
    std::set<Edge> edges(h.edges.begin(), h.edges.end());
    // Every size drops by one somewhere, so every smaller size is reachable
    // by induction.
    for (const auto& e : edges) {
        if (e.size() < 2) continue;
        bool found = false;
        for (std::size_t skip = 0; skip < e.size() && !found; ++skip) {
            Edge sub;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (i != skip) sub.push_back(e[i]);
            }
            found = edges.count(sub) > 0;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace geomcolor

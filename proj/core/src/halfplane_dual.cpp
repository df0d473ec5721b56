#include "geomcolor/halfplane_dual.hpp"

#include <algorithm>
#include <stdexcept>

#include "geomcolor/general_position.hpp"
#include "geomcolor/halfplane_primal.hpp"
#include "geomcolor/hull.hpp"

namespace geomcolor {
namespace {

void require_halfplanes(const std::vector<HalfPlane>& hs) {
    if (hs.empty()) throw std::invalid_argument("empty half-plane family");
    Instance inst;
    inst.family = Family::h_rects;
    inst.halfplanes = hs;
    require_general_position(inst);
}

// Feasibility of { beta > y - alpha*x : (x,y) in lowers } and
// { beta < y - alpha*x : (x,y) in uppers } over (alpha, beta).
// The slack f(alpha) = min(uppers) - max(lowers) is concave piecewise
// linear, so it is positive somewhere iff it is positive at a breakpoint
// or still climbing past the extreme breakpoints.
bool strict_lp_feasible(const std::vector<Point>& lowers, const std::vector<Point>& uppers) {
    if (lowers.empty() || uppers.empty()) return true;
    auto slack = [&](const Rat& alpha) {
        Rat up = uppers[0].y - alpha * uppers[0].x;
        for (const auto& u : uppers) {
            Rat v = u.y - alpha * u.x;
            if (v < up) up = v;
        }
        Rat lo = lowers[0].y - alpha * lowers[0].x;
        for (const auto& l : lowers) {
            Rat v = l.y - alpha * l.x;
            if (v > lo) lo = v;
        }
        return Rat(up - lo);
    };
    std::vector<Point> all = lowers;
    all.insert(all.end(), uppers.begin(), uppers.end());
    std::vector<Rat> cand;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i].x != all[j].x) {
                cand.push_back((all[i].y - all[j].y) / (all[i].x - all[j].x));
            }
        }
    }
    if (cand.empty()) cand.push_back(0);
    std::sort(cand.begin(), cand.end());
    for (const auto& a : cand) {
        if (slack(a) > 0) return true;
    }
    return slack(cand.back() + 1) > slack(cand.back()) ||
           slack(cand.front() - 1) > slack(cand.front());
}

std::vector<Point> positions(const std::vector<DirectedPoint>& duals,
                             const std::vector<std::size_t>& idx) {
    std::vector<Point> out;
    for (std::size_t i : idx) out.push_back(duals[i].position());
    return out;
}

}  // namespace

DirectedPoint dualize(const HalfPlane& h) {
    return DirectedPoint{h.slope, h.intercept,
                         h.region == HalfPlaneRegion::above ? DualOrientation::north
                                                            : DualOrientation::south};
}

std::vector<DirectedPoint> dualize(const std::vector<HalfPlane>& hs) {
    std::vector<DirectedPoint> out;
    out.reserve(hs.size());
    for (const auto& h : hs) out.push_back(dualize(h));
    return out;
}

std::pair<Rat, Rat> dual_line(const Point& p) { return {Rat(-p.x), p.y}; }

bool dual_sees(const DirectedPoint& d, const Rat& slope, const Rat& intercept) {
    Rat v = slope * d.x + intercept;
    return d.orientation == DualOrientation::north ? d.y < v : d.y > v;
}

CaterpillarGraph build_caterpillar(const std::vector<DirectedPoint>& duals) {
    std::vector<std::size_t> north, south;
    for (std::size_t i = 0; i < duals.size(); ++i) {
        (duals[i].orientation == DualOrientation::north ? north : south).push_back(i);
    }
    CaterpillarGraph g;
    auto np = positions(duals, north);
    auto sp = positions(duals, south);
    for (std::size_t v : lower_hull_indices(np)) g.p_path.push_back(north[v]);
    for (std::size_t v : upper_hull_indices(sp)) g.q_path.push_back(south[v]);

    auto pt = [&](const std::vector<std::size_t>& path, std::size_t pos) {
        return duals[path[pos]].position();
    };
    for (std::size_t i = 0; i < g.p_path.size(); ++i) {
        for (std::size_t j = 0; j < g.q_path.size(); ++j) {
            std::vector<Point> lowers{pt(g.p_path, i)}, uppers{pt(g.q_path, j)};
            if (i > 0) uppers.push_back(pt(g.p_path, i - 1));
            if (i + 1 < g.p_path.size()) uppers.push_back(pt(g.p_path, i + 1));
            if (j > 0) lowers.push_back(pt(g.q_path, j - 1));
            if (j + 1 < g.q_path.size()) lowers.push_back(pt(g.q_path, j + 1));
            if (strict_lp_feasible(lowers, uppers)) g.cross_edges.emplace_back(i, j);
        }
    }
    for (const auto& [i, j] : g.cross_edges) {
        for (const auto& [i2, j2] : g.cross_edges) {
            if (i < i2 && j < j2) throw std::logic_error("crossing caterpillar edges");
        }
    }
    return g;
}

Coloring color_halfplanes_k2(const std::vector<HalfPlane>& hs) {
    require_halfplanes(hs);
    auto duals = dualize(hs);
    auto cat = build_caterpillar(duals);

    // graph over the path vertices
    std::vector<std::size_t> nodes = cat.p_path;
    nodes.insert(nodes.end(), cat.q_path.begin(), cat.q_path.end());
    const std::size_t m = nodes.size();
    const std::size_t np = cat.p_path.size();
    std::vector<std::vector<std::size_t>> adj(m);
    auto link = [&](std::size_t u, std::size_t v) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    };
    for (std::size_t i = 0; i + 1 < np; ++i) link(i, i + 1);
    for (std::size_t j = 0; j + 1 < cat.q_path.size(); ++j) link(np + j, np + j + 1);
    for (const auto& [i, j] : cat.cross_edges) link(i, np + j);

    // outerplanar, hence 2-degenerate: peel degree <= 2, color greedily back
    std::vector<std::size_t> deg(m), stack;
    std::vector<bool> removed(m, false);
    for (std::size_t u = 0; u < m; ++u) deg[u] = adj[u].size();
    for (std::size_t round = 0; round < m; ++round) {
        std::size_t pick = m;
        for (std::size_t u = 0; u < m; ++u) {
            if (!removed[u] && deg[u] <= 2) {
                pick = u;
                break;
            }
        }
        if (pick == m) throw std::logic_error("caterpillar is not 2-degenerate");
        removed[pick] = true;
        stack.push_back(pick);
        for (std::size_t v : adj[pick]) {
            if (!removed[v]) --deg[v];
        }
    }
    std::vector<int> node_color(m, -1);
    for (std::size_t t = m; t-- > 0;) {
        std::size_t u = stack[t];
        bool used[3] = {false, false, false};
        for (std::size_t v : adj[u]) {
            if (node_color[v] >= 0) used[node_color[v]] = true;
        }
        int c = 0;
        while (used[c]) ++c;
        node_color[u] = c;
    }

    std::vector<int> colors(hs.size(), -1);
    for (std::size_t t = 0; t < m; ++t) colors[nodes[t]] = node_color[t];

    // off-path duals avoid both x-bracketing chain vertices
    auto bracket_color = [&](const std::vector<std::size_t>& path, const DirectedPoint& d) {
        auto cmp = [&](std::size_t pos, const Rat& x) { return duals[path[pos]].x < x; };
        std::size_t lo = 0, hi = path.size();
        while (lo < hi) {  // first path position with x >= d.x
            std::size_t mid = (lo + hi) / 2;
            if (cmp(mid, d.x)) lo = mid + 1;
            else hi = mid;
        }
        if (lo >= path.size()) throw std::logic_error("dual point outside its chain span");
        std::size_t right = lo;
        std::size_t left = duals[path[lo]].x == d.x ? lo : lo - 1;
        if (lo == 0 && duals[path[0]].x != d.x) {
            throw std::logic_error("dual point outside its chain span");
        }
        bool used[3] = {false, false, false};
        used[colors[path[left]]] = true;
        used[colors[path[right]]] = true;
        int c = 0;
        while (used[c]) ++c;
        return c;
    };
    for (std::size_t i = 0; i < duals.size(); ++i) {
        if (colors[i] >= 0) continue;
        bool isnorth = duals[i].orientation == DualOrientation::north;
        colors[i] = bracket_color(isnorth ? cat.p_path : cat.q_path, duals[i]);
    }
    return Coloring{3, std::move(colors)};
}

Coloring color_halfplanes_k4(const std::vector<HalfPlane>& hs) {
    require_halfplanes(hs);
    auto duals = dualize(hs);
    std::vector<std::size_t> north, south;
    for (std::size_t i = 0; i < duals.size(); ++i) {
        (duals[i].orientation == DualOrientation::north ? north : south).push_back(i);
    }
    std::vector<int> colors(hs.size(), 0);
    if (!north.empty()) {
        auto c = color_points_h_k3(positions(duals, north));
        for (std::size_t t = 0; t < north.size(); ++t) colors[north[t]] = c.colors[t];
    }
    if (!south.empty()) {
        auto c = color_points_h_k3(positions(duals, south));
        for (std::size_t t = 0; t < south.size(); ++t) colors[south[t]] = 1 - c.colors[t];
    }
    return Coloring{2, std::move(colors)};
}

}  // namespace geomcolor

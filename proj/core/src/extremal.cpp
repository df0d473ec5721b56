#include "geomcolor/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "geomcolor/halfplane_primal.hpp"
#include "geomcolor/oracle.hpp"
#include "geomcolor/routing.hpp"

namespace geomcolor {
namespace {

// Edges grouped by their largest vertex so each DFS level checks exactly
// the edges it completes.
std::vector<std::vector<const std::vector<std::size_t>*>> bucket_by_max(const Hypergraph& h) {
    std::vector<std::vector<const std::vector<std::size_t>*>> buckets(h.vertex_count);
    for (const auto& e : h.edges) {
        if (!e.empty()) buckets[e.back()].push_back(&e);
    }
    return buckets;
}

bool search(const Hypergraph& h,
            const std::vector<std::vector<const std::vector<std::size_t>*>>& buckets, int k,
            int palette, std::vector<int>& colors, std::size_t v, int used) {
    if (v == h.vertex_count) return true;
    int limit = std::min(used + 1, palette);
    for (int c = 0; c < limit; ++c) {
        colors[v] = c;
        bool ok = true;
        for (const auto* e : buckets[v]) {
            if (e->size() < static_cast<std::size_t>(k)) continue;
            bool mono = std::all_of(e->begin(), e->end(),
                                    [&](std::size_t u) { return colors[u] == c; });
            if (mono) {
                ok = false;
                break;
            }
        }
        if (ok && search(h, buckets, k, palette, colors, v + 1, std::max(used, c + 1))) {
            return true;
        }
    }
    colors[v] = -1;
    return false;
}

}  // namespace

ChromaticResult exact_chromatic(const Hypergraph& h, int k, int max_colors) {
    const std::size_t n = h.vertex_count;
    if (n == 0) return {1, Coloring{1, {}}};
    if (std::pow(static_cast<double>(max_colors), static_cast<double>(n)) > 1e9) {
        throw std::runtime_error("exact_chromatic: search budget exceeded");
    }
    auto buckets = bucket_by_max(h);
    for (int c = 1; c <= max_colors; ++c) {
        std::vector<int> colors(n, -1);
        if (search(h, buckets, k, c, colors, 0, 0)) {
            return {c, Coloring{c, std::move(colors)}};
        }
    }
    return {std::nullopt, {}};
}

int cf_color_bound(std::size_t n, int palette) {
    if (n <= 1) return 1;
    double ratio = static_cast<double>(palette) / (palette - 1);
    return static_cast<int>(std::ceil(std::log(static_cast<double>(n)) / std::log(ratio))) + 1;
}

Coloring cf_from_proper(const Instance& inst, int k) {
    const std::size_t n = inst.size();
    std::vector<int> out(n, -1);
    std::vector<std::size_t> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 0);
    int fresh = 0;
    while (!remaining.empty()) {
        auto col = run_proper_coloring(subinstance(inst, remaining), k);
        std::vector<std::size_t> class_size(col.palette_size, 0);
        for (int c : col.colors) ++class_size[c];
        int biggest = 0;
        for (int c = 1; c < col.palette_size; ++c) {
            if (class_size[c] > class_size[biggest]) biggest = c;
        }
        std::vector<std::size_t> rest;
        for (std::size_t t = 0; t < remaining.size(); ++t) {
            if (col.colors[t] == biggest) out[remaining[t]] = fresh;
            else rest.push_back(remaining[t]);
        }
        remaining = std::move(rest);
        ++fresh;
    }
    return Coloring{std::max(fresh, 1), std::move(out)};
}

Instance construction_b_3points() {
    Instance i;
    i.family = Family::b_points;
    i.points = {{0, 0}, {1, 2}, {2, 1}};
    return i;
}

Instance construction_b_12points() {
    Instance i;
    i.family = Family::b_points;
    const int ys[12] = {10, 11, 12, 1, 6, 2, 9, 8, 7, 5, 4, 3};
    for (int t = 0; t < 12; ++t) i.points.push_back({t + 1, ys[t]});
    return i;
}

Instance construction_b_3rects() {
    Instance i;
    i.family = Family::b_rects;
    i.rects = {{0, 10, 1}, {1, 5, 3}, {4, 9, 2}};
    return i;
}

Instance construction_pstar() {
    Instance i;
    i.family = Family::h_points;
    i.points = {{0, 0}, {4, 0}, {2, 4}, {2, 1}};
    return i;
}

Instance construction_quad_generic() {
    Instance i;
    i.family = Family::h_points;
    i.points = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    return i;
}

Instance construction_h_3halfplanes() {
    Instance i;
    i.family = Family::h_rects;
    i.halfplanes = {{0, 0, HalfPlaneRegion::above},
                    {1, 10, HalfPlaneRegion::below},
                    {-1, 10, HalfPlaneRegion::below}};
    return i;
}

Instance construction_bprime_4rects() {
    Instance i;
    i.family = Family::bprime_rects;
    i.baseline_rects = {{0, 10, -1, 1},
                        {1, 5, -2, 3},
                        {4, 9, -3, 2},
                        {-1, 11, -20, Rat(1) / 4}};
    return i;
}

Instance construction_bprime_3points() {
    Instance i;
    i.family = Family::bprime_points;
    i.points = {{0, 1}, {1, 3}, {2, 2}};
    return i;
}

namespace {

bool has_all_pairs(const Hypergraph& h, std::size_t n) {
    std::set<std::vector<std::size_t>> edges(h.edges.begin(), h.edges.end());
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!edges.count({a, b})) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Certification> certify_constructions() {
    std::vector<Certification> report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.push_back({std::move(name), ok, std::move(detail)});
    };
    auto needs = [&](const Instance& inst, int k, int colors) {
        auto h = enumerate_hyperedges(inst);
        bool below_fails = !exact_chromatic(h, k, colors - 1).colors.has_value();
        auto at = exact_chromatic(h, k, colors).colors;
        return below_fails && at && *at == colors;
    };

    {
        auto inst = construction_b_3points();
        bool pairs = has_all_pairs(enumerate_hyperedges(inst), 3);
        add("bottomless 3-point set", pairs && needs(inst, 2, 3),
            "every pair is a hyperedge; 3 colors needed at k=2");
    }
    {
        auto inst = construction_b_12points();
        auto h = enumerate_hyperedges(inst);
        std::set<std::vector<std::size_t>> edges(h.edges.begin(), h.edges.end());
        bool structure = edges.count({0, 1, 2}) && edges.count({6, 7, 8}) &&
                         edges.count({9, 10, 11});
        for (std::size_t a : {0, 1, 2}) structure = structure && edges.count({a, 3, 4});
        for (std::size_t g : {6, 7, 8}) structure = structure && edges.count({4, 5, g});
        for (std::size_t m : {9, 10, 11}) structure = structure && edges.count({3, 5, m});
        bool no2 = !exact_chromatic(h, 3, 2).colors.has_value();
        bool with3 = exact_chromatic(h, 3, 3).colors.has_value();
        add("bottomless 12-point set", structure && no2 && with3,
            "wing triples realized; no 3-proper 2-coloring; 3 colors suffice");
    }
    {
        auto inst = construction_b_3rects();
        bool pairs = has_all_pairs(enumerate_hyperedges(inst), 3);
        add("bottomless 3-rectangle family", pairs && needs(inst, 2, 3),
            "every pair covers a private point; 3 colors needed at k=2");
    }
    {
        auto inst = construction_pstar();
        add("exceptional 4-point set", is_pstar(inst.points) && needs(inst, 2, 4),
            "one point inside the others' triangle; 4 colors needed at k=2");
    }
    {
        auto inst = construction_quad_generic();
        auto at = exact_chromatic(enumerate_hyperedges(inst), 2, 3).colors;
        add("convex 4-point set", at.has_value() && *at <= 3,
            "4 points in convex position 2-properly colorable with at most 3 colors");
    }
    {
        auto inst = construction_h_3halfplanes();
        bool pairs = has_all_pairs(enumerate_hyperedges(inst), 3);
        add("3 half-planes", pairs && needs(inst, 2, 3),
            "every pair has a private depth-2 cell; 3 colors needed at k=2");
    }
    {
        auto inst = construction_bprime_4rects();
        bool pairs = has_all_pairs(enumerate_hyperedges(inst), 4);
        add("4 base-line rectangles", pairs && needs(inst, 2, 4),
            "every pair covers a private point; 4 colors needed at k=2");
    }
    {
        auto inst = construction_bprime_3points();
        bool pairs = has_all_pairs(enumerate_hyperedges(inst), 3);
        add("base-line 3-point set", pairs && needs(inst, 2, 3),
            "every pair is a hyperedge; 3 colors needed at k=2");
    }
    return report;
}

}  // namespace geomcolor

#include <doctest.h>

#include <algorithm>
#include <set>

#include "geomcolor/baseline_reductions.hpp"
#include "geomcolor/bottomless_dual.hpp"
#include "geomcolor/bottomless_primal.hpp"
#include "geomcolor/generate.hpp"
#include "geomcolor/halfplane_dual.hpp"
#include "geomcolor/halfplane_primal.hpp"
#include "geomcolor/hull.hpp"
#include "geomcolor/oracle.hpp"
#include "geomcolor/routing.hpp"

using namespace geomcolor;

namespace {

void check_route(Family f, int k, int expected_palette, std::size_t n_max) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        std::size_t n = 1 + (seed * 13) % n_max;
        auto inst = generate_instance(f, n, seed);
        auto col = run_proper_coloring(inst, k);
        CAPTURE(family_name(f));
        CAPTURE(k);
        CAPTURE(seed);
        CAPTURE(n);
        CHECK(col.palette_size == expected_palette);
        CHECK(col.colors.size() == n);
        for (int c : col.colors) {
            CHECK(c >= 0);
            CHECK(c < col.palette_size);
        }
        auto verdict = verify_kproper(enumerate_hyperedges(inst), col, k);
        CAPTURE(verdict.reason);
        CHECK(verdict.valid);
    }
}

// Every hyperedge meets the hull vertices in a cyclically consecutive run.
bool hull_consecutive(const std::vector<Point>& pts, const Hypergraph& h) {
    auto hull = convex_hull_indices(pts);
    std::vector<int> pos(pts.size(), -1);
    for (std::size_t i = 0; i < hull.size(); ++i) pos[hull[i]] = static_cast<int>(i);
    for (const auto& e : h.edges) {
        std::set<int> on_hull;
        for (auto v : e) {
            if (pos[v] >= 0) on_hull.insert(pos[v]);
        }
        if (on_hull.size() <= 1 || on_hull.size() == hull.size()) continue;
        // Consecutive on a cycle iff exactly one gap between successive members.
        std::vector<int> s(on_hull.begin(), on_hull.end());
        int gaps = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            int next = s[(i + 1) % s.size()];
            int expect = (s[i] + 1) % static_cast<int>(hull.size());
            if (next != expect) ++gaps;
        }
        if (gaps > 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("every route produces an oracle-verified coloring in its palette") {
    check_route(Family::b_points, 2, 3, 40);
    check_route(Family::b_points, 4, 2, 40);
    check_route(Family::b_rects, 2, 3, 25);
    check_route(Family::b_rects, 3, 2, 25);
    check_route(Family::h_points, 2, 4, 30);
    check_route(Family::h_points, 3, 2, 30);
    check_route(Family::h_rects, 2, 3, 25);
    check_route(Family::h_rects, 4, 2, 25);
    check_route(Family::bprime_points, 2, 6, 40);
    check_route(Family::bprime_points, 3, 3, 40);
    check_route(Family::bprime_points, 7, 2, 40);
    check_route(Family::bprime_rects, 3, 4, 25);
}

TEST_CASE("routing rejects what it cannot color") {
    auto pts = generate_instance(Family::b_points, 3, 0);
    CHECK_THROWS_AS(run_proper_coloring(pts, 1), std::invalid_argument);
    auto rects = generate_instance(Family::bprime_rects, 3, 0);
    CHECK_THROWS_AS(run_proper_coloring(rects, 2), std::invalid_argument);
    CHECK_THROWS_AS(palette_for(Family::bprime_rects, 2), std::invalid_argument);
    CHECK(palette_for(Family::b_points, 3) == 3);
    CHECK(palette_for(Family::bprime_points, 6) == 3);
}

TEST_CASE("interior points avoid the full hull palette at k=2") {
    // A refined instance off the exceptional configuration stays at 3 colors.
    std::vector<Point> pts = {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 1}, {1, 2}};
    auto col = color_points_h_k2(pts);
    int max_used = *std::max_element(col.colors.begin(), col.colors.end());
    CHECK(max_used <= 2);
    CHECK(verify_kproper(enumerate_primal_halfplane(pts), col, 2).valid);
}

TEST_CASE("exceptional 4-point configuration is detected") {
    CHECK(is_pstar({{0, 0}, {4, 0}, {2, 4}, {2, 1}}));
    CHECK(!is_pstar({{0, 0}, {4, 0}, {4, 4}, {0, 4}}));
    CHECK(!is_pstar({{0, 0}, {4, 0}, {2, 4}}));
    auto col = color_points_h_k2({{0, 0}, {4, 0}, {2, 4}, {2, 1}});
    std::set<int> used(col.colors.begin(), col.colors.end());
    CHECK(used.size() == 4);
}

TEST_CASE("3-proper point coloring leaves no lonely blue pair") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::size_t n = 2 + (seed * 7) % 40;
        auto inst = generate_instance(Family::h_points, n, seed);
        auto col = color_points_h_k3(inst.points);
        CAPTURE(seed);
        CHECK(check_obs20(inst.points, col));
    }
}

TEST_CASE("hyperedges are consecutive along the hull") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto inst = generate_instance(Family::h_points, 3 + seed % 10, seed);
        CHECK(hull_consecutive(inst.points, enumerate_primal_halfplane(inst.points)));
    }
}

TEST_CASE("caterpillar paths are hull chains with non-crossing cross edges") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        std::size_t n = 2 + (seed * 5) % 30;
        auto inst = generate_instance(Family::h_rects, n, seed);
        auto duals = dualize(inst.halfplanes);
        auto cat = build_caterpillar(duals);
        CAPTURE(seed);
        // Chains are x-sorted.
        for (std::size_t i = 1; i < cat.p_path.size(); ++i) {
            CHECK(duals[cat.p_path[i - 1]].x < duals[cat.p_path[i]].x);
        }
        for (std::size_t i = 1; i < cat.q_path.size(); ++i) {
            CHECK(duals[cat.q_path[i - 1]].x < duals[cat.q_path[i]].x);
        }
        // No two cross edges (i,j), (i',j') with i<i' and j<j'.
        for (std::size_t a = 0; a < cat.cross_edges.size(); ++a) {
            for (std::size_t b = a + 1; b < cat.cross_edges.size(); ++b) {
                auto [i1, j1] = cat.cross_edges[a];
                auto [i2, j2] = cat.cross_edges[b];
                bool crossing = (i1 < i2 && j1 < j2) || (i2 < i1 && j2 < j1);
                CHECK(!crossing);
            }
        }
    }
}

TEST_CASE("duality preserves membership") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto hs = generate_instance(Family::h_rects, 10, seed).halfplanes;
        auto pts = generate_instance(Family::h_points, 10, seed + 1000).points;
        for (const auto& h : hs) {
            auto d = dualize(h);
            for (const auto& p : pts) {
                auto [slope, intercept] = dual_line(p);
                CHECK(h.contains(p) == dual_sees(d, slope, intercept));
            }
        }
    }
}

TEST_CASE("paired base-line coloring stays 3-proper per side") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto inst = generate_instance(Family::bprime_rects, 12, seed);
        auto col = color_rects_bprime_k3(inst.baseline_rects);
        // Upper component is the pair's high bit, lower the low bit; each
        // must itself be 3-proper for its bottomless family.
        std::vector<BottomlessRect> upper, lower;
        for (const auto& r : inst.baseline_rects) {
            upper.push_back({r.a, r.b, r.top});
            lower.push_back({r.a, r.b, Rat(-r.bottom)});
        }
        Coloring cu{2, {}}, cl{2, {}};
        for (int c : col.colors) {
            cu.colors.push_back(c / 2);
            cl.colors.push_back(c % 2);
        }
        CHECK(verify_kproper(enumerate_dual_bottomless(upper), cu, 3).valid);
        CHECK(verify_kproper(enumerate_dual_bottomless(lower), cl, 3).valid);
    }
}

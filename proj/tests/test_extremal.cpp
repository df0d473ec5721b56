#include <doctest.h>

#include <cmath>

#include "geomcolor/extremal.hpp"
#include "geomcolor/fast_check.hpp"
#include "geomcolor/generate.hpp"
#include "geomcolor/io.hpp"
#include "geomcolor/oracle.hpp"
#include "geomcolor/routing.hpp"

using namespace geomcolor;

namespace {

// Reference search without canonicity or pruning: try every coloring.
bool colorable_reference(const Hypergraph& h, int k, int palette) {
    std::size_t n = h.vertex_count;
    if (palette < 1) return n == 0;
    std::vector<int> colors(n, 0);
    for (;;) {
        bool ok = true;
        for (const auto& e : h.edges) {
            if (e.size() < static_cast<std::size_t>(k)) continue;
            int c = colors[e.front()];
            bool mono = true;
            for (auto v : e) mono = mono && colors[v] == c;
            if (mono) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
        std::size_t i = 0;
        while (i < n && colors[i] == palette - 1) colors[i++] = 0;
        if (i == n) return false;
        ++colors[i];
    }
}

bool same_instance(const Instance& a, const Instance& b) {
    return a.family == b.family && a.points == b.points && a.rects == b.rects &&
           a.halfplanes == b.halfplanes && a.baseline_rects == b.baseline_rects;
}

}  // namespace

TEST_CASE("exhaustive search agrees with the no-pruning reference") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (Family f : {Family::b_points, Family::h_points, Family::b_rects}) {
            std::size_t n = 1 + seed % 6;
            auto h = enumerate_hyperedges(generate_instance(f, n, seed));
            for (int k = 2; k <= 3; ++k) {
                for (int palette = 1; palette <= 3; ++palette) {
                    auto result = exact_chromatic(h, k, palette);
                    bool expect = colorable_reference(h, k, palette);
                    CAPTURE(family_name(f));
                    CAPTURE(seed);
                    CAPTURE(k);
                    CAPTURE(palette);
                    CHECK(result.colors.has_value() == expect);
                    if (result.colors) {
                        CHECK(verify_kproper(h, result.witness, k).valid);
                        CHECK(!colorable_reference(h, k, *result.colors - 1));
                    }
                }
            }
        }
    }
}

TEST_CASE("exhaustive search is monotone in k") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto h = enumerate_hyperedges(generate_instance(Family::b_points, 6, seed));
        std::optional<int> prev;
        for (int k = 2; k <= 5; ++k) {
            auto r = exact_chromatic(h, k, 4).colors;
            REQUIRE(r);
            if (prev) CHECK(*r <= *prev);
            prev = r;
        }
    }
}

TEST_CASE("search budget guard trips") {
    Hypergraph huge;
    huge.vertex_count = 40;
    CHECK_THROWS_AS(exact_chromatic(huge, 2, 4), std::runtime_error);
}

TEST_CASE("every committed construction certifies") {
    for (const auto& cert : certify_constructions()) {
        CAPTURE(cert.name);
        CAPTURE(cert.detail);
        CHECK(cert.passed);
    }
}

TEST_CASE("construction data files match the in-code instances") {
    const std::pair<const char*, Instance> files[] = {
        {"b_3points.json", construction_b_3points()},
        {"b_12points.json", construction_b_12points()},
        {"b_3rects.json", construction_b_3rects()},
        {"pstar.json", construction_pstar()},
        {"quad_generic.json", construction_quad_generic()},
        {"h_3halfplanes.json", construction_h_3halfplanes()},
        {"bprime_4rects.json", construction_bprime_4rects()},
        {"bprime_3points.json", construction_bprime_3points()},
    };
    for (const auto& [file, expected] : files) {
        CAPTURE(file);
        auto parsed = parse_instance(read_file(std::string(DATA_DIR) + "/" + file));
        CHECK(same_instance(parsed, expected));
    }
}

TEST_CASE("conflict-free colorings verify and respect the color bound") {
    CHECK(cf_color_bound(27, 3) == 10);
    CHECK(cf_color_bound(1, 3) == 1);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        {
            auto inst = generate_instance(Family::b_points, 30, seed);
            auto col = cf_from_proper(inst, 2);
            CHECK(fast_verify_cf(inst, col, 1).valid);
            CHECK(col.palette_size <= cf_color_bound(30, 3));
            // A conflict-free refinement of proper colorings stays proper.
            CHECK(fast_verify_kproper(inst, col, 2).valid);
        }
        {
            auto inst = generate_instance(Family::h_points, 30, seed);
            auto col = cf_from_proper(inst, 3);
            CHECK(fast_verify_cf(inst, col, 2).valid);
            CHECK(col.palette_size <= cf_color_bound(30, 2));
        }
        {
            auto inst = generate_instance(Family::b_rects, 15, seed);
            auto col = cf_from_proper(inst, 3);
            CHECK(verify_cf(enumerate_hyperedges(inst), col, 2).valid);
        }
    }
    // Singleton needs a single color.
    Instance one;
    one.family = Family::b_points;
    one.points = {{0, 0}};
    CHECK(cf_from_proper(one, 2).palette_size == 1);
}

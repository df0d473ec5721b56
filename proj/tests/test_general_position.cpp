#include <doctest.h>

#include "geomcolor/general_position.hpp"
#include "geomcolor/generate.hpp"

using namespace geomcolor;

namespace {

Instance points_instance(Family f, std::vector<Point> pts) {
    Instance i;
    i.family = f;
    i.points = std::move(pts);
    return i;
}

}  // namespace

TEST_CASE("validation catches coordinate ties") {
    auto ok = points_instance(Family::b_points, {{0, 0}, {1, 2}, {2, 1}});
    CHECK(!validate_general_position(ok));

    auto tie_x = points_instance(Family::b_points, {{0, 0}, {0, 2}});
    auto v = validate_general_position(tie_x);
    REQUIRE(v);
    CHECK(v->reason == "duplicate x-coordinate");

    auto tie_y = points_instance(Family::b_points, {{0, 1}, {2, 1}});
    REQUIRE(validate_general_position(tie_y));
}

TEST_CASE("validation catches collinear points and base-line hits") {
    auto col = points_instance(Family::h_points, {{0, 0}, {1, 1}, {2, 2}, {3, 1}});
    auto v = validate_general_position(col);
    REQUIRE(v);
    CHECK(v->indices == std::vector<std::size_t>{0, 1, 2});

    auto on_line = points_instance(Family::bprime_points, {{0, 1}, {1, 0}});
    REQUIRE(validate_general_position(on_line));

    Instance rects;
    rects.family = Family::b_rects;
    rects.rects = {{0, 5, 1}, {5, 9, 2}};  // shared edge x
    REQUIRE(validate_general_position(rects));

    Instance not_crossing;
    not_crossing.family = Family::bprime_rects;
    not_crossing.baseline_rects = {{0, 1, 1, 2}};
    REQUIRE(validate_general_position(not_crossing));
}

TEST_CASE("perturb restores general position and is idempotent") {
    SUBCASE("tied coordinates") {
        auto bad = points_instance(Family::b_points, {{0, 0}, {0, 0}, {1, 5}, {2, 5}});
        auto fixed = perturb(bad);
        CHECK(!validate_general_position(fixed));
        // Already-valid input comes back unchanged.
        auto again = perturb(fixed);
        CHECK(again.points == fixed.points);
    }
    SUBCASE("collinear points") {
        auto bad = points_instance(Family::h_points, {{0, 0}, {1, 1}, {2, 2}, {5, 0}});
        auto fixed = perturb(bad);
        CHECK(!validate_general_position(fixed));
    }
    SUBCASE("base-line points keep their side") {
        auto bad = points_instance(Family::bprime_points, {{0, 1}, {1, 1}, {2, -1}, {3, -1}});
        auto fixed = perturb(bad);
        CHECK(!validate_general_position(fixed));
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK((fixed.points[i].y > 0) == (bad.points[i].y > 0));
        }
    }
    SUBCASE("baseline rectangles keep crossing") {
        Instance bad;
        bad.family = Family::bprime_rects;
        bad.baseline_rects = {{0, 4, -1, 2}, {1, 4, -1, 2}};
        auto fixed = perturb(bad);
        CHECK(!validate_general_position(fixed));
        for (const auto& r : fixed.baseline_rects) {
            CHECK(r.bottom < 0);
            CHECK(r.top > 0);
        }
    }
    SUBCASE("order of distinct coordinates is preserved") {
        auto bad = points_instance(Family::b_points, {{0, 3}, {1, 3}, {5, 8}});
        auto fixed = perturb(bad);
        CHECK(fixed.points[0].x < fixed.points[1].x);
        CHECK(fixed.points[1].x < fixed.points[2].x);
        CHECK(fixed.points[0].y < fixed.points[2].y);
        CHECK(fixed.points[1].y < fixed.points[2].y);
    }
}

TEST_CASE("generated instances validate for every family") {
    for (Family f : {Family::b_points, Family::b_rects, Family::h_points, Family::h_rects,
                     Family::bprime_points, Family::bprime_rects}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto inst = generate_instance(f, 20, seed);
            CAPTURE(family_name(f));
            CAPTURE(seed);
            CHECK(inst.size() == 20);
            CHECK(!validate_general_position(inst));
        }
    }
}

TEST_CASE("generation is seed-deterministic") {
    auto a = generate_instance(Family::h_points, 15, 42);
    auto b = generate_instance(Family::h_points, 15, 42);
    auto c = generate_instance(Family::h_points, 15, 43);
    CHECK(a.points == b.points);
    CHECK(a.points != c.points);
}

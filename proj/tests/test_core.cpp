#include <doctest.h>

#include "geomcolor/hull.hpp"
#include "geomcolor/predicates.hpp"
#include "geomcolor/rational.hpp"

using namespace geomcolor;

TEST_CASE("rational literals round-trip") {
    CHECK(parse_rational("5") == Rat(5));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(parse_rational("1/3") == Rat(1) / 3);
    CHECK(parse_rational("-2/4") == Rat(-1) / 2);
    CHECK(format_rational(Rat(42)) == "42");
    CHECK(format_rational(Rat(3) / 7) == "3/7");
    CHECK(format_rational(Rat(-1) / 2) == "-1/2");
    CHECK(parse_rational(format_rational(Rat(123456789) / 987654321)) ==
          Rat(123456789) / 987654321);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("orientation predicate") {
    Point a{0, 0}, b{1, 0}, c{0, 1};
    CHECK(orient(a, b, c) == Turn::left);
    CHECK(orient(a, c, b) == Turn::right);
    CHECK(orient(a, b, Point{2, 0}) == Turn::collinear);
    // Tiny rational offsets must not be absorbed.
    CHECK(orient(a, b, Point{2, Rat(1) / 1000000000}) == Turn::left);
}

TEST_CASE("convex hull basics") {
    std::vector<Point> pts = {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}, {1, 3}};
    auto hull = convex_hull_indices(pts);
    REQUIRE(hull.size() == 4);
    CHECK(hull[0] == 0);  // lowest-x start
    for (std::size_t i = 0; i < hull.size(); ++i) {
        // Clockwise orientation: consecutive triples never turn left.
        auto p = pts[hull[i]], q = pts[hull[(i + 1) % 4]], r = pts[hull[(i + 2) % 4]];
        CHECK(orient(p, q, r) == Turn::right);
    }
}

TEST_CASE("convex hull degenerate inputs") {
    CHECK(convex_hull_indices({}).empty());
    CHECK(convex_hull_indices({{1, 1}}) == std::vector<std::size_t>{0});
    CHECK(convex_hull_indices({{0, 0}, {1, 1}}).size() == 2);
    // Collinear interior points are dropped.
    auto hull = convex_hull_indices({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    CHECK(hull.size() == 2);
}

TEST_CASE("lower and upper hull chains") {
    std::vector<Point> pts = {{0, 0}, {2, -1}, {4, 0}, {2, 3}, {1, 1}};
    auto low = lower_hull_indices(pts);
    auto up = upper_hull_indices(pts);
    REQUIRE(low.size() >= 2);
    REQUIRE(up.size() >= 2);
    CHECK(pts[low.front()].x == Rat(0));
    CHECK(pts[low.back()].x == Rat(4));
    CHECK(pts[up.front()].x == Rat(0));
    CHECK(pts[up.back()].x == Rat(4));
    for (std::size_t i = 1; i < low.size(); ++i) CHECK(pts[low[i - 1]].x < pts[low[i]].x);
    CHECK(low == std::vector<std::size_t>{0, 1, 2});
    CHECK(up == std::vector<std::size_t>{0, 3, 2});
}

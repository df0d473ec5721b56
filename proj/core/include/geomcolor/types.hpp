#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "geomcolor/rational.hpp"

namespace geomcolor {

struct Point {
    Rat x;
    Rat y;

    friend bool operator==(const Point&, const Point&) = default;
};

// Open region {(x,y) : a < x < b, y < c}.
struct BottomlessRect {
    Rat a;  // left
    Rat b;  // right
    Rat c;  // top

    bool contains(const Point& p) const { return a < p.x && p.x < b && p.y < c; }
    friend bool operator==(const BottomlessRect&, const BottomlessRect&) = default;
};

// Open axis-parallel rectangle crossing the base-line y = 0 (bottom < 0 < top).
struct BaselineRect {
    Rat a;
    Rat b;
    Rat bottom;
    Rat top;

    bool contains(const Point& p) const {
        return a < p.x && p.x < b && bottom < p.y && p.y < top;
    }
    friend bool operator==(const BaselineRect&, const BaselineRect&) = default;
};

enum class HalfPlaneRegion { above, below };

// Open half-plane with non-vertical boundary y = slope*x + intercept.
struct HalfPlane {
    Rat slope;
    Rat intercept;
    HalfPlaneRegion region = HalfPlaneRegion::above;

    Rat boundary_at(const Rat& x) const { return slope * x + intercept; }
    bool contains(const Point& p) const {
        Rat v = boundary_at(p.x);
        return region == HalfPlaneRegion::above ? p.y > v : p.y < v;
    }
    friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

enum class DualOrientation { north, south };

// Dual of a half-plane: the boundary's (slope, intercept) as a point,
// oriented north for a lower boundary and south for an upper one.
struct DirectedPoint {
    Rat x;
    Rat y;
    DualOrientation orientation = DualOrientation::north;

    Point position() const { return Point{x, y}; }
    friend bool operator==(const DirectedPoint&, const DirectedPoint&) = default;
};

enum class Family {
    b_points,
    b_rects,
    h_points,
    h_rects,
    bprime_points,
    bprime_rects,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// One geometric input: exactly one of the payload vectors is populated,
// selected by `family`.
struct Instance {
    Family family = Family::b_points;
    std::vector<Point> points;
    std::vector<BottomlessRect> rects;
    std::vector<HalfPlane> halfplanes;
    std::vector<BaselineRect> baseline_rects;

    std::size_t size() const {
        switch (family) {
            case Family::b_points:
            case Family::h_points:
            case Family::bprime_points: return points.size();
            case Family::b_rects: return rects.size();
            case Family::h_rects: return halfplanes.size();
            case Family::bprime_rects: return baseline_rects.size();
        }
        return 0;
    }
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::b_points: return "b-points";
        case Family::b_rects: return "b-rects";
        case Family::h_points: return "h-points";
        case Family::h_rects: return "h-rects";
        case Family::bprime_points: return "bprime-points";
        case Family::bprime_rects: return "bprime-rects";
    }
    throw std::logic_error("bad family");
}

inline Family family_from_name(const std::string& name) {
    if (name == "b-points") return Family::b_points;
    if (name == "b-rects") return Family::b_rects;
    if (name == "h-points") return Family::h_points;
    if (name == "h-rects") return Family::h_rects;
    if (name == "bprime-points") return Family::bprime_points;
    if (name == "bprime-rects") return Family::bprime_rects;
    throw std::invalid_argument("unknown family: " + name);
}

}  // namespace geomcolor

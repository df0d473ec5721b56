#pragma once

#include "geomcolor/types.hpp"

namespace geomcolor {

enum class Turn { left, right, collinear };

// Sign of the 2x2 determinant of (q-p, r-p). Exact.
inline int orient_sign(const Point& p, const Point& q, const Point& r) {
    Rat det = (q.x - p.x) * (r.y - p.y) - (r.x - p.x) * (q.y - p.y);
    return det > 0 ? 1 : det < 0 ? -1 : 0;
}

inline Turn orient(const Point& p, const Point& q, const Point& r) {
    int s = orient_sign(p, q, r);
    return s > 0 ? Turn::left : s < 0 ? Turn::right : Turn::collinear;
}

}  // namespace geomcolor

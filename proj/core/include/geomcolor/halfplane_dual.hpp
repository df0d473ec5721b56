#pragma once

#include <utility>

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

// Half-plane {y >< ax+b} maps to the directed point (a,b): north for a
// lower boundary (region above), south for an upper one. A point (c,d)
// maps to the line y = -cx + d; membership is preserved exactly:
// p in h  <=>  dual_sees(dualize(h), dual_line(p)).
std::vector<DirectedPoint> dualize(const std::vector<HalfPlane>& hs);
DirectedPoint dualize(const HalfPlane& h);
std::pair<Rat, Rat> dual_line(const Point& p);  // (slope, intercept)

// The vertical ray from d in its orientation meets the line.
bool dual_sees(const DirectedPoint& d, const Rat& slope, const Rat& intercept);

// Lower hull of the north duals (p-path) and upper hull of the south duals
// (q-path), joined by cross edges (i, j) wherever some line passes below
// exactly p_i among p-path points near it and above exactly q_j: feasibility
// of at most 6 strict linear inequalities in the line's (slope, intercept).
// Drawn with the q-path reversed on a parallel line, cross edges never
// cross: no two edges (i,j), (i',j') with i<i' and j<j'.
struct CaterpillarGraph {
    std::vector<std::size_t> p_path;  // indices into the dual list
    std::vector<std::size_t> q_path;
    std::vector<std::pair<std::size_t, std::size_t>> cross_edges;  // path positions
};

CaterpillarGraph build_caterpillar(const std::vector<DirectedPoint>& duals);

// 3 colors, 2-proper for half-planes: 3-color the caterpillar by degree
// peeling; every dual point off its hull chain avoids the colors of its two
// x-bracketing chain vertices.
Coloring color_halfplanes_k2(const std::vector<HalfPlane>& hs);

// 2 colors, 4-proper: the 2-color 3-proper point coloring applied to the
// north duals, and color-inverted to the south duals.
Coloring color_halfplanes_k4(const std::vector<HalfPlane>& hs);

}  // namespace geomcolor

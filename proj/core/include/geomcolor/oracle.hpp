#pragma once

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

// Brute-force enumeration of every realizable hyperedge. Quadratic to
// quartic in n; intended as a test-time ground truth, not a product path.
// All functions require (and check) general position.
Hypergraph enumerate_primal_bottomless(const std::vector<Point>& pts);
Hypergraph enumerate_primal_halfplane(const std::vector<Point>& pts);
Hypergraph enumerate_primal_baseline(const std::vector<Point>& pts);
Hypergraph enumerate_dual_bottomless(const std::vector<BottomlessRect>& rects);
Hypergraph enumerate_dual_halfplane(const std::vector<HalfPlane>& hs);
Hypergraph enumerate_dual_baseline(const std::vector<BaselineRect>& rects);

// Independent definition-level samplers over finer witness grids, used to
// cross-check the structured enumerations above. Same outputs on valid
// inputs; quartic or worse, keep n small.
Hypergraph enumerate_primal_bottomless_naive(const std::vector<Point>& pts);
Hypergraph enumerate_primal_halfplane_naive(const std::vector<Point>& pts);
Hypergraph enumerate_primal_baseline_naive(const std::vector<Point>& pts);
Hypergraph enumerate_dual_bottomless_naive(const std::vector<BottomlessRect>& rects);
Hypergraph enumerate_dual_halfplane_naive(const std::vector<HalfPlane>& hs);
Hypergraph enumerate_dual_baseline_naive(const std::vector<BaselineRect>& rects);

// Family-dispatching front door for the structured enumerations.
Hypergraph enumerate_hyperedges(const Instance& inst);

// True iff for every hyperedge E and every l <= |E| some hyperedge
// E' subset of E has exactly l vertices (holds for all monotone families).
bool check_monotonicity(const Hypergraph& h);

}  // namespace geomcolor

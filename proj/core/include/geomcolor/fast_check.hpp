#pragma once

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

// Streaming verifiers for the primal (point) families, equivalent to
// enumerating every hyperedge and checking it, but without materializing
// the hypergraph:
//   b-points / bprime-points: a monochromatic hyperedge of size >= k exists
//     iff some x-window's k points nearest the threshold direction are
//     monochromatic, so a window sweep with k-candidate heaps suffices.
//   h-points: every hyperedge is a strict side of a line through two input
//     points plus any subset of those two, so an O(n^2) pair sweep covers
//     all of them.
// Agreement with the enumeration oracles is property-tested at small n.
// Supported: b-points, h-points, bprime-points for k-proper; b-points and
// h-points for cf. Throws std::invalid_argument otherwise.
Verdict fast_verify_kproper(const Instance& inst, const Coloring& col, int k);
Verdict fast_verify_cf(const Instance& inst, const Coloring& col, int k);

}  // namespace geomcolor

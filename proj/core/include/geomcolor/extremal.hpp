#pragma once

#include <optional>
#include <string>

#include "geomcolor/hypergraph.hpp"
#include "geomcolor/types.hpp"

namespace geomcolor {

struct ChromaticResult {
    std::optional<int> colors;  // smallest palette admitting a k-proper coloring
    Coloring witness;           // set when colors has a value
};

// Exhaustive search over canonical colorings (vertex 0 gets color 0, new
// colors appear in first-use order), pruning as soon as a size >= k
// hyperedge is fully assigned one color. Throws std::runtime_error when
// max_colors^vertex_count exceeds the 1e9 search budget.
ChromaticResult exact_chromatic(const Hypergraph& h, int k, int max_colors);

// Conflict-free coloring from repeated proper colorings: color the
// remaining elements k-properly, give the largest color class (smallest
// color index on ties) a fresh color, remove it, repeat. The result is
// cf_{k-1}: every hyperedge has a color appearing at most k-1 times, using
// at most cf_color_bound(n, c) colors where c is the routed palette size.
Coloring cf_from_proper(const Instance& inst, int k);

// ceil(log n / log(c/(c-1))) + 1
int cf_color_bound(std::size_t n, int palette);

// Small instances realizing the tight lower bounds.
Instance construction_b_3points();       // 3 colors needed at k=2
Instance construction_b_12points();      // no 3-proper 2-coloring
Instance construction_b_3rects();        // 3 colors needed at k=2 (dual)
Instance construction_pstar();           // 4 colors needed at k=2
Instance construction_quad_generic();    // 4 points in convex position, <=3
Instance construction_h_3halfplanes();   // 3 colors needed at k=2 (dual)
Instance construction_bprime_4rects();   // 4 colors needed at k=2 (dual)
Instance construction_bprime_3points();  // 3 colors needed at k=2

struct Certification {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Builds every construction, re-derives its hyperedges with the oracle,
// checks the structural property it was designed for, and runs
// exact_chromatic against the claimed bound.
std::vector<Certification> certify_constructions();

}  // namespace geomcolor

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace geomcolor {

// Vertex set {0..vertex_count-1}; edges kept sorted internally and
// deduplicated, in lexicographic order.
struct Hypergraph {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::size_t>> edges;

    // Sorts each edge, drops empty and duplicate edges, orders the edge list.
    void normalize();

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

struct Coloring {
    int palette_size = 1;
    std::vector<int> colors;  // one entry per vertex, each in [0, palette_size)
};

inline Coloring make_coloring(std::vector<int> colors) {
    int pal = 1;
    for (int c : colors) pal = std::max(pal, c + 1);
    return Coloring{pal, std::move(colors)};
}

struct Verdict {
    bool valid = true;
    std::optional<std::vector<std::size_t>> witness;  // first violating edge
    std::string reason;
};

// Valid iff no hyperedge of size >= k is monochromatic.
Verdict verify_kproper(const Hypergraph& h, const Coloring& col, int k);

// Valid iff every nonempty hyperedge contains a color used between 1 and k
// times within it.
Verdict verify_cf(const Hypergraph& h, const Coloring& col, int k);

}  // namespace geomcolor

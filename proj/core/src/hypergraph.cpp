#include "geomcolor/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace geomcolor {

void Hypergraph::normalize() {
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::erase_if(edges, [](const auto& e) { return e.empty(); });
}

namespace {
void check_lengths(const Hypergraph& h, const Coloring& col) {
    if (col.colors.size() != h.vertex_count) {
        throw std::invalid_argument("coloring length does not match vertex count");
    }
}
}  // namespace

Verdict verify_kproper(const Hypergraph& h, const Coloring& col, int k) {
    check_lengths(h, col);
    for (const auto& e : h.edges) {
        if (e.size() < static_cast<std::size_t>(k)) continue;
        int c = col.colors[e[0]];
        bool mono = std::all_of(e.begin(), e.end(),
                                [&](std::size_t v) { return col.colors[v] == c; });
        if (mono) {
            return Verdict{false, e,
                           "monochromatic hyperedge of size " + std::to_string(e.size()) +
                               " in color " + std::to_string(c)};
        }
    }
    return {};
}

Verdict verify_cf(const Hypergraph& h, const Coloring& col, int k) {
    check_lengths(h, col);
    std::vector<int> count(std::max(col.palette_size, 1), 0);
    for (const auto& e : h.edges) {
        if (e.empty()) continue;
        for (std::size_t v : e) ++count.at(col.colors[v]);
        bool ok = false;
        for (std::size_t v : e) {
            int c = count[col.colors[v]];
            if (c >= 1 && c <= k) {
                ok = true;
                break;
            }
        }
        for (std::size_t v : e) count[col.colors[v]] = 0;
        if (!ok) {
            return Verdict{false, e, "no color class of size in [1, " + std::to_string(k) +
                                         "] inside the hyperedge"};
        }
    }
    return {};
}

}  // namespace geomcolor

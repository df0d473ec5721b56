#include "geomcolor/routing.hpp"

#include <stdexcept>

#include "geomcolor/baseline_reductions.hpp"
#include "geomcolor/bottomless_dual.hpp"
#include "geomcolor/bottomless_primal.hpp"
#include "geomcolor/halfplane_dual.hpp"
#include "geomcolor/halfplane_primal.hpp"

namespace geomcolor {
namespace {

[[noreturn]] void unsupported(Family f, int k) {
    throw std::invalid_argument("no algorithm for family " + family_name(f) + " at k=" +
                                std::to_string(k));
}

}  // namespace

int palette_for(Family family, int k) {
    if (k < 2) unsupported(family, k);
    switch (family) {
        case Family::b_points: return k <= 3 ? 3 : 2;
        case Family::b_rects: return k == 2 ? 3 : 2;
        case Family::h_points: return k == 2 ? 4 : 2;
        case Family::h_rects: return k <= 3 ? 3 : 2;
        case Family::bprime_points: return k == 2 ? 6 : k <= 6 ? 3 : 2;
        case Family::bprime_rects:
            if (k == 2) unsupported(family, k);
            return 4;
    }
    throw std::logic_error("bad family");
}

Coloring run_proper_coloring(const Instance& inst, int k) {
    if (k < 2) unsupported(inst.family, k);
    switch (inst.family) {
        case Family::b_points:
            return k <= 3 ? color_points_b_k2(inst.points) : color_points_b_k4(inst.points);
        case Family::b_rects:
            return k == 2 ? color_rects_b_k2(inst.rects) : color_rects_b_k3(inst.rects);
        case Family::h_points:
            return k == 2 ? color_points_h_k2(inst.points) : color_points_h_k3(inst.points);
        case Family::h_rects:
            return k <= 3 ? color_halfplanes_k2(inst.halfplanes)
                          : color_halfplanes_k4(inst.halfplanes);
        case Family::bprime_points:
            if (k == 2) return color_points_bprime_k2(inst.points);
            return k <= 6 ? color_points_bprime_k3(inst.points)
                          : color_points_bprime_k7(inst.points);
        case Family::bprime_rects:
            if (k == 2) unsupported(inst.family, k);
            return color_rects_bprime_k3(inst.baseline_rects);
    }
    throw std::logic_error("bad family");
}

Instance subinstance(const Instance& inst, const std::vector<std::size_t>& keep) {
    Instance out;
    out.family = inst.family;
    for (std::size_t i : keep) {
        switch (inst.family) {
            case Family::b_points:
            case Family::h_points:
            case Family::bprime_points: out.points.push_back(inst.points[i]); break;
            case Family::b_rects: out.rects.push_back(inst.rects[i]); break;
            case Family::h_rects: out.halfplanes.push_back(inst.halfplanes[i]); break;
            case Family::bprime_rects:
                out.baseline_rects.push_back(inst.baseline_rects[i]);
                break;
        }
    }
    return out;
}

}  // namespace geomcolor

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "geomcolor/types.hpp"

namespace geomcolor {

struct GpViolation {
    std::vector<std::size_t> indices;
    std::string reason;
};

class GeneralPositionError : public std::runtime_error {
  public:
    explicit GeneralPositionError(GpViolation v)
        : std::runtime_error("general position violated: " + v.reason), violation(std::move(v)) {}
    GpViolation violation;
};

// Family-specific general-position checks:
//   b-points:       all x distinct, all y distinct
//   b-rects:        all 2n edge x-coordinates distinct, all tops distinct
//   h-points:       pairwise distinct points, no 3 collinear
//   h-rects:        no two identical boundary lines, no 3 dual points collinear
//   bprime-points:  b-points rules plus no point on the base-line y = 0
//   bprime-rects:   b-rects rules plus distinct bottoms and bottom < 0 < top
// Returns the first violation found (scanning in input order), if any.
std::optional<GpViolation> validate_general_position(const Instance& inst);

inline void require_general_position(const Instance& inst) {
    if (auto v = validate_general_position(inst)) throw GeneralPositionError(*v);
}

// Deterministic perturbation into general position. A valid input is
// returned unchanged, so perturb is idempotent on its own output.
// Coordinate ties are broken by adding i*eps to the i-th offending
// coordinate in input order, eps = (min nonzero gap) / (4*(n+1)); the
// relative order of already-distinct coordinates is preserved. For the
// half-plane families, collinearity is removed by a shrinking
// moment-curve shift (i*eps, i^2*eps^2) applied per point.
Instance perturb(const Instance& inst);

}  // namespace geomcolor

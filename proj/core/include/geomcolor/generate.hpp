#pragma once

#include <cstdint>

#include "geomcolor/types.hpp"

namespace geomcolor {

// Seed-deterministic random instance in general position. Coordinates are
// integers drawn from [0, 10*n^2] (base-line families draw y from
// [-10*n^2, 10*n^2] \ {0} so both sides of the line are populated).
// Candidates violating general position are rejected and redrawn; throws
// std::runtime_error when the retry budget is exhausted.
Instance generate_instance(Family family, std::size_t n, std::uint64_t seed);

}  // namespace geomcolor

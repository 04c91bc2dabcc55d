#pragma once

// Deterministic SVG picture of the ample cone of F_e with the walls of a
// fixed type drawn as rays and optional polarization marks. Identical inputs
// produce identical bytes: fixed canvas, fixed styles, three-decimal
// coordinates, walls in enumeration order, marks in input order.

#include <string>
#include <vector>

#include "bnwall/walls.hpp"

namespace bnwall::cli {

struct ConeSvg {
    std::string document;
    std::size_t wall_count = 0;
};

// Plot plane: horizontal = fibre coefficient b, vertical = section
// coefficient a. Marks must be ample classes.
ConeSvg cone_svg(const Surface& s, const DivisorClass& c1, i64 c2,
                 const std::vector<DivisorClass>& marks);

} // namespace bnwall::cli

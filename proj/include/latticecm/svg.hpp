#ifndef LATTICECM_SVG_HPP
#define LATTICECM_SVG_HPP

#include <string>

#include "latticecm/numeric.hpp"

namespace latticecm {

// SVG 1.1 drawing of a codimension-2 Gale diagram: axes, one labeled
// arrow per row, and translucent quadrant shading when the diagram meets
// all four open quadrants.  All coordinates are computed in exact
// arithmetic and rounded once, so the output bytes depend only on the
// input matrix.
std::string render_gale_svg(const IntMatrix& points);

}  // namespace latticecm

#endif  // LATTICECM_SVG_HPP

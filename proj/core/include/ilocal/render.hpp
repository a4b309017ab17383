#pragma once

#include <string>

#include "ilocal/tower.hpp"

namespace ilocal {

enum class RenderFormat { Ascii, Svg };

/// Tower diagram, one column per tower in input order and one row per
/// grading, highest first. Elements are 'o'; the tail of an oriented tower
/// is 'v' (down) or '^' (up); '|' marks an in-span row of the other parity.
/// Lines are capped at 120 columns, dropping towers past the cap and ending
/// every row with " ...". Free towers run to the bottom row.
std::string render_ascii(const FUModule& m);

/// SVG 1.1 rendering of the same layout; byte-identical for equal input.
std::string render_svg(const FUModule& m);

std::string render(const FUModule& m, RenderFormat format);

}  // namespace ilocal

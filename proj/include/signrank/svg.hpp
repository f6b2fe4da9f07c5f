#ifndef SIGNRANK_SVG_HPP
#define SIGNRANK_SVG_HPP

#include <string>

#include "signrank/incidence.hpp"
#include "signrank/realizer.hpp"

namespace signrank {

/// Draws the configuration: one labeled dot per point at its affine
/// position and one segment per line spanning its extreme points, extended
/// by 10% of its length at each end. Floating point is used for layout only
/// (12 significant digits). Points at infinity are first moved into the
/// affine chart with normalize_affine(). Throws InvalidStructure if `r` does
/// not realize `s`.
std::string render_svg(const IncidenceStructure& s, const Realization& r);

}  // namespace signrank

#endif  // SIGNRANK_SVG_HPP

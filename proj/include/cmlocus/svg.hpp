#pragma once

#include <string>

#include "cmlocus/arrangement.hpp"

namespace cmlocus {

struct PlotStyle {
    double size = 600.0;        // canvas edge, px
    double stroke_unit = 2.0;   // line stroke width per unit multiplicity
};

/// SVG picture of an arrangement: the n lines through the origin at visual
/// angles theta_i / 2 (double cover), stroke width proportional to m_i, plus
/// an inset circle carrying the n particles at angles theta_i labeled by
/// charge.  Output is deterministic: identical input gives identical bytes.
std::string render_svg(const Arrangement& a, const PlotStyle& style = {});

}  // namespace cmlocus

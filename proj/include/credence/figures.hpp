#pragma once

#include "credence/litigation.hpp"

#include <string>
#include <vector>

namespace credence {

enum class FigureKind { Prior, Joint, Posterior };

/// An axis-aligned rectangle in mathematical coordinates (origin bottom-left,
/// y up). Dimensions are exact rationals so diagram areas can be asserted
/// without float noise.
struct DiagramRect {
    Rational x, y, width, height;
    std::string label;
    std::string fill_class;

    Rational area() const { return width * height; }
};

/// A mosaic-style area diagram over a unit-width canvas. For the prior figure
/// the rectangle areas total exactly 1; for the joint figure they total the
/// marginal; for the posterior figure the rescaled areas total exactly 1
/// again (the bounding box may then exceed unit height).
struct AreaDiagram {
    std::vector<DiagramRect> rects;
    Rational bbox_width{1};
    Rational bbox_height{1};
    std::string title;
};

/// Prior: unit square split left-to-right by stage priors (pre-trial left),
/// each column split by the government conditional with the government strip
/// at the bottom. Joint: only the government strips. Posterior: the joint
/// strips with heights divided by the marginal so areas renormalize to 1.
/// The rounding policy feeds the joint/posterior stages exactly as in
/// posterior_table.
AreaDiagram make_figure(const StageTable& table, RoundingPolicy policy, FigureKind kind);

/// Deterministic SVG 1.1 rendering on a fixed 600×600 canvas with a 10-unit
/// margin; numbers are printed with 6 significant digits.
std::string to_svg(const AreaDiagram& diagram);

} // namespace credence

#include "credence/figures.hpp"

#include "credence/bayes.hpp"
#include "credence/errors.hpp"

#include <algorithm>

namespace credence {

AreaDiagram make_figure(const StageTable& table, RoundingPolicy policy, FigureKind kind) {
    const Rational prior_pre = table.prior_pre.value();
    const Rational prior_post = table.prior_post.value();

    AreaDiagram diagram;
    switch (kind) {
    case FigureKind::Prior: {
        diagram.title = "Prior probabilities";
        const Rational gov_pre = table.cond_gov_given_pre.value();
        const Rational gov_post = table.cond_gov_given_post.value();
        diagram.rects = {
            {0, 0, prior_pre, gov_pre, "pre-trial, government", "gov striped"},
            {0, gov_pre, prior_pre, 1 - gov_pre, "pre-trial, non-government", "nongov"},
            {prior_pre, 0, prior_post, gov_post, "trial-or-post, government", "gov dotted"},
            {prior_pre, gov_post, prior_post, 1 - gov_post, "trial-or-post, non-government",
             "nongov"},
        };
        break;
    }
    case FigureKind::Joint: {
        diagram.title = "Joint probabilities";
        const PosteriorTable posterior = posterior_table(table, policy);
        // Heights chosen so each strip's area equals its joint probability.
        const Rational height_pre =
            prior_pre == 0 ? Rational(0) : posterior.joint_pre.value() / prior_pre;
        const Rational height_post =
            prior_post == 0 ? Rational(0) : posterior.joint_post.value() / prior_post;
        diagram.rects = {
            {0, 0, prior_pre, height_pre, "pre-trial and government", "gov striped"},
            {prior_pre, 0, prior_post, height_post, "trial-or-post and government",
             "gov dotted"},
        };
        break;
    }
    case FigureKind::Posterior: {
        diagram.title = "Posterior probabilities";
        const PosteriorTable posterior = posterior_table(table, policy);
        const Rational marginal = posterior.marginal_gov.value();
        // The joint strips blown up by 1/marginal: areas now sum to 1.
        const Rational height_pre =
            prior_pre == 0 ? Rational(0) : posterior.joint_pre.value() / prior_pre / marginal;
        const Rational height_post =
            prior_post == 0 ? Rational(0)
                            : posterior.joint_post.value() / prior_post / marginal;
        diagram.rects = {
            {0, 0, prior_pre, height_pre, "pre-trial given government", "gov striped"},
            {prior_pre, 0, prior_post, height_post, "trial-or-post given government",
             "gov dotted"},
        };
        diagram.bbox_height = std::max({Rational(1), height_pre, height_post});
        break;
    }
    }
    return diagram;
}

namespace {

constexpr int kCanvas = 600;
constexpr int kMargin = 10;

std::string num(const Rational& r) { return significant_string(r, 6); }

} // namespace

std::string to_svg(const AreaDiagram& diagram) {
    const Rational extent = std::max(diagram.bbox_width, diagram.bbox_height);
    const Rational scale = Rational(kCanvas - 2 * kMargin) / extent;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" "
           "height=\"600\" viewBox=\"0 0 600 600\">\n";
    svg += "<title>" + diagram.title + "</title>\n";
    svg += "<defs>\n"
           "<pattern id=\"stripes\" width=\"8\" height=\"8\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\">"
           "<rect width=\"8\" height=\"8\" fill=\"#c8d8f0\"/>"
           "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#3a5a8c\" stroke-width=\"3\"/>"
           "</pattern>\n"
           "<pattern id=\"dots\" width=\"10\" height=\"10\" patternUnits=\"userSpaceOnUse\">"
           "<rect width=\"10\" height=\"10\" fill=\"#f0e0c8\"/>"
           "<circle cx=\"5\" cy=\"5\" r=\"2\" fill=\"#8c5a3a\"/>"
           "</pattern>\n"
           "</defs>\n";
    svg += "<style>rect.gov.striped{fill:url(#stripes);}rect.gov.dotted{fill:url(#dots);}"
           "rect.nongov{fill:#e8e8e8;}rect{stroke:#202020;stroke-width:1;}</style>\n";

    const Rational box_height = diagram.bbox_height * scale;
    for (const auto& rect : diagram.rects) {
        const Rational x = kMargin + rect.x * scale;
        // Flip to SVG's y-down convention inside the scaled bounding box.
        const Rational y = kMargin + box_height - (rect.y + rect.height) * scale;
        svg += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" +
               num(rect.width * scale) + "\" height=\"" + num(rect.height * scale) +
               "\" class=\"" + rect.fill_class + "\"><title>" + rect.label + ": " +
               fraction_string(rect.area()) + "</title></rect>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace credence

#pragma once

#include <span>
#include <string>

#include "bezspline/hull.hpp"
#include "bezspline/spline.hpp"

namespace bezspline::io {

struct SvgOptions {
    int width = 800;
    int height = 500;
    /// Fraction of the data extent added on every side.
    double margin = 0.05;
    double dot_radius = 3.5;
};

/// SVG 1.1 figure: dashed control polygon, solid curve, control points as dots.
/// Mathematical up is visual up. Output is deterministic for identical input.
std::string write_svg(std::span<const Point2> control, std::span<const Point2> curve, const SvgOptions& options = {});

std::string write_svg(const ControlPolygon& control, std::span<const Sample> samples, const SvgOptions& options = {});

}  // namespace bezspline::io

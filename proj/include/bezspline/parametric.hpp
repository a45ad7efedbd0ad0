#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "bezspline/hull.hpp"
#include "bezspline/spline.hpp"

namespace bezspline {

enum class Parameterization { Uniform, Chord };

std::string_view to_string(Parameterization kind) noexcept;
/// Accepts "uniform" or "chord"; throws ErrorCode::Validation otherwise.
Parameterization parse_parameterization(std::string_view text);

/// Planar control points; at least two.
using PlanarControlPoints = std::vector<Point2>;

/// Planar curve (X(t), Y(t)), one scalar spline per coordinate on a shared
/// parameter grid and shared node placement.
struct ParametricCurve {
    std::vector<double> t;
    SplineCurve sx;
    SplineCurve sy;
    Parameterization parameterization;

    [[nodiscard]] Point2 point(double param) const;
    [[nodiscard]] Point2 tangent(double param) const;
};

struct ParametricSample {
    double t;
    double x;
    double y;
    friend bool operator==(const ParametricSample&, const ParametricSample&) = default;
};

/// Uniform: t_i = i. Chord: cumulative Euclidean distance from the first point.
std::vector<double> parameterize(std::span<const Point2> points, Parameterization kind);

ParametricCurve build_parametric(std::span<const Point2> points, const NodePlacement& placement,
                                 Parameterization kind = Parameterization::Chord);

std::vector<ParametricSample> sample_parametric(const ParametricCurve& curve, std::size_t count);

/// Hull margin of `count` samples against the control points.
double parametric_hull_margin(const ParametricCurve& curve, std::span<const Point2> points, std::size_t count);

}  // namespace bezspline

#pragma once

#include <span>
#include <vector>

#include "bezspline/spline.hpp"

namespace bezspline {

struct Point2 {
    double x;
    double y;
    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Counter-clockwise convex hull (monotone chain). Points within
/// `tolerance` of a hull edge's line are treated as collinear and dropped.
/// Degenerate inputs return one or two points.
std::vector<Point2> convex_hull(std::span<const Point2> points, double tolerance);

/// Signed distance of p to the hull boundary: positive inside, negative outside.
/// For a two-point hull this is minus the distance to the segment.
double signed_hull_distance(std::span<const Point2> hull, Point2 p);

/// Minimum signed distance of the samples to the convex hull of `control`.
double hull_margin(std::span<const Point2> control, std::span<const Point2> samples);

/// Scalar form: hull of (tau_i, F_i) against sampled (x, S(x)).
double hull_check(const ControlPolygon& control, std::span<const Sample> samples);

std::vector<Point2> to_points(const ControlPolygon& control);

}  // namespace bezspline

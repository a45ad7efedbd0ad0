#pragma once

// Single-threaded reference kernels. They follow the textbook grouping of the
// formulas (interval length h and offset mu only) rather than the node-based
// arithmetic of the parallel kernels, and exist to cross-check them in tests
// and benchmarks.

#include <span>
#include <vector>

#include "bezspline/hull.hpp"
#include "bezspline/spline.hpp"

namespace bezspline::serial {

TridiagonalSystem assemble_system(const SplineGrids& grids);
std::vector<double> compute_q(const SplineGrids& grids, std::span<const double> phi);
std::vector<double> eval_many(const SplineCurve& spline, std::span<const double> xs);
double hull_margin(std::span<const Point2> control, std::span<const Point2> samples);

}  // namespace bezspline::serial

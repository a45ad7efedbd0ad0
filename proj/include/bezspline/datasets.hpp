#pragma once

#include <optional>
#include <string_view>

#include "bezspline/spline.hpp"

namespace bezspline::datasets {

/// Eleven control points on [1, 11] with a tall spike at tau = 9.
ControlPolygon spiky_net();

/// Eleven control points on the upper semicircle y = sqrt(x - x^2), x in [0, 1],
/// ordinates as published to ten significant digits.
ControlPolygon semicircle();

/// Dataset by id (1 = spiky_net, 2 = semicircle).
std::optional<ControlPolygon> by_id(int id);

std::string_view description(int id);

}  // namespace bezspline::datasets

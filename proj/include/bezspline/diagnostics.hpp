#pragma once

#include <cstddef>
#include <vector>

#include "bezspline/spline.hpp"

namespace bezspline {

/// Numerical health report for a solved spline.
struct Diagnostics {
    /// |diag| - |sub| - |sup| on interior rows (row k <-> knot tau[k]).
    std::vector<double> dominance_margins;
    /// |S'(tau[k]-) - S'(tau[k]+)| at interior knots.
    std::vector<double> c1_residuals;
    /// |S(x[j]) - f[j]| and |S'(x[j]) - fp[j]| at interior nodes.
    std::vector<double> interp_value_residuals;
    std::vector<double> interp_slope_residuals;
    /// Minimum signed distance of the sampled curve to the control-point hull.
    double hull_margin = 0.0;
    double scale = 1.0;

    [[nodiscard]] double min_dominance_margin() const noexcept;
    [[nodiscard]] double max_c1_residual() const noexcept;
    [[nodiscard]] double max_interp_value_residual() const noexcept;
    [[nodiscard]] double max_interp_slope_residual() const noexcept;
};

inline constexpr std::size_t kDefaultSampleCount = 1000;

/// Derivative jumps at interior knots.
std::vector<double> c1_residuals(const SplineCurve& spline);

Diagnostics diagnose(const SplineCurve& spline, std::size_t sample_count = kDefaultSampleCount);

struct SplineBuild {
    SplineCurve curve;
    Diagnostics diagnostics;
};

SplineBuild build_spline_diagnosed(const ControlPolygon& control, const NodePlacement& placement,
                                   std::size_t sample_count = kDefaultSampleCount);

}  // namespace bezspline

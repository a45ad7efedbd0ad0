#include "bezspline/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "bezspline/hull.hpp"

namespace bezspline {

namespace {

double max_of(const std::vector<double>& v) {
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

}  // namespace

double Diagnostics::min_dominance_margin() const noexcept {
    return dominance_margins.empty() ? std::numeric_limits<double>::infinity()
                                     : *std::min_element(dominance_margins.begin(), dominance_margins.end());
}
double Diagnostics::max_c1_residual() const noexcept { return max_of(c1_residuals); }
double Diagnostics::max_interp_value_residual() const noexcept { return max_of(interp_value_residuals); }
double Diagnostics::max_interp_slope_residual() const noexcept { return max_of(interp_slope_residuals); }

std::vector<double> c1_residuals(const SplineCurve& spline) {
    const std::size_t n = spline.grids().nodes();
    std::vector<double> out(n > 2 ? n - 2 : 0);
    const auto& tau = spline.grids().tau;
    const auto count = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i) + 1;
        out[k - 1] = std::abs(spline.slope_on(k - 1, tau[k]) - spline.slope_on(k, tau[k]));
    }
    return out;
}

Diagnostics diagnose(const SplineCurve& spline, std::size_t sample_count) {
    const SplineGrids& g = spline.grids();
    Diagnostics d;
    d.scale = spline.scale();

    const std::vector<double> margins = check_dominance(assemble_system(g));
    if (margins.size() > 2) d.dominance_margins.assign(margins.begin() + 1, margins.end() - 1);

    d.c1_residuals = c1_residuals(spline);

    const std::size_t n = g.intervals();
    d.interp_value_residuals.resize(n);
    d.interp_slope_residuals.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        d.interp_value_residuals[j] = std::abs(spline.value_on(j, g.x[j]) - g.f[j]);
        d.interp_slope_residuals[j] = std::abs(spline.slope_on(j, g.x[j]) - g.fp[j]);
    }

    const std::vector<Sample> samples = sample(spline, std::max<std::size_t>(sample_count, 2));
    d.hull_margin = hull_check(ControlPolygon{g.tau, g.F}, samples);
    return d;
}

SplineBuild build_spline_diagnosed(const ControlPolygon& control, const NodePlacement& placement,
                                   std::size_t sample_count) {
    SplineCurve curve = build_spline(control, placement);
    Diagnostics diagnostics = diagnose(curve, sample_count);
    return {std::move(curve), std::move(diagnostics)};
}

}  // namespace bezspline

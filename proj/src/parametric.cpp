#include "bezspline/parametric.hpp"

#include <cmath>
#include <string>

namespace bezspline {

std::string_view to_string(Parameterization kind) noexcept {
    return kind == Parameterization::Chord ? "chord" : "uniform";
}

Parameterization parse_parameterization(std::string_view text) {
    if (text == "chord") return Parameterization::Chord;
    if (text == "uniform") return Parameterization::Uniform;
    throw SplineError(ErrorCode::Validation,
                      "parameterization must be \"chord\" or \"uniform\", got \"" + std::string(text) + "\"",
                      "parameterization");
}

std::vector<double> parameterize(std::span<const Point2> points, Parameterization kind) {
    if (points.size() < 2) throw SplineError(ErrorCode::Arity, "at least 2 control points required", "points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
            const std::string where = "points[" + std::to_string(i) + "]";
            throw SplineError(ErrorCode::NonFinite, where + " is not finite", where);
        }
    }
    std::vector<double> t(points.size(), 0.0);
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (kind == Parameterization::Uniform) {
            t[i] = static_cast<double>(i);
            continue;
        }
        const double chord = std::hypot(points[i].x - points[i - 1].x, points[i].y - points[i - 1].y);
        if (!(chord > 0.0)) {
            const std::string where = "points[" + std::to_string(i) + "]";
            throw SplineError(ErrorCode::Validation, where + " coincides with the previous point", where);
        }
        t[i] = t[i - 1] + chord;
    }
    return t;
}

ParametricCurve build_parametric(std::span<const Point2> points, const NodePlacement& placement,
                                 Parameterization kind) {
    std::vector<double> t = parameterize(points, kind);
    ControlPolygon cx{t, {}};
    ControlPolygon cy{t, {}};
    cx.F.reserve(points.size());
    cy.F.reserve(points.size());
    for (const auto& p : points) {
        cx.F.push_back(p.x);
        cy.F.push_back(p.y);
    }
    SplineCurve sx = build_spline(cx, placement);
    SplineCurve sy = build_spline(cy, placement);
    return ParametricCurve{std::move(t), std::move(sx), std::move(sy), kind};
}

Point2 ParametricCurve::point(double param) const { return {eval(sx, param), eval(sy, param)}; }

Point2 ParametricCurve::tangent(double param) const { return {eval_deriv(sx, param), eval_deriv(sy, param)}; }

std::vector<ParametricSample> sample_parametric(const ParametricCurve& curve, std::size_t count) {
    const std::vector<double> ts = uniform_grid(curve.t.front(), curve.t.back(), count);
    const std::vector<double> xs = eval_many(curve.sx, ts);
    const std::vector<double> ys = eval_many(curve.sy, ts);
    std::vector<ParametricSample> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) out[i] = {ts[i], xs[i], ys[i]};
    return out;
}

double parametric_hull_margin(const ParametricCurve& curve, std::span<const Point2> points, std::size_t count) {
    const auto samples = sample_parametric(curve, count);
    std::vector<Point2> pts(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) pts[i] = {samples[i].x, samples[i].y};
    return hull_margin(points, pts);
}

}  // namespace bezspline

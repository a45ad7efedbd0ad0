#include "bezspline/spline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace bezspline {

namespace {

std::string indexed(const char* name, std::size_t i) {
    return std::string(name) + "[" + std::to_string(i) + "]";
}

void require_in_domain(const SplineCurve& spline, double x) {
    if (!(x >= spline.a() && x <= spline.b())) {
        throw SplineError(ErrorCode::Domain,
                          "x=" + format_number(x) + " outside [" + format_number(spline.a()) + ", " +
                              format_number(spline.b()) + "]");
    }
}

}  // namespace

void ControlPolygon::validate() const {
    if (tau.size() != F.size()) {
        throw SplineError(ErrorCode::Arity,
                          "tau has " + std::to_string(tau.size()) + " entries but F has " +
                              std::to_string(F.size()));
    }
    if (tau.size() < 2) {
        throw SplineError(ErrorCode::Arity, "at least 2 control points required");
    }
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (!std::isfinite(tau[i])) throw SplineError(ErrorCode::NonFinite, indexed("tau", i) + " is not finite", indexed("tau", i));
        if (!std::isfinite(F[i])) throw SplineError(ErrorCode::NonFinite, indexed("F", i) + " is not finite", indexed("F", i));
    }
    for (std::size_t i = 1; i < tau.size(); ++i) {
        if (!(tau[i] > tau[i - 1])) {
            throw SplineError(ErrorCode::NonIncreasing,
                              "tau must be strictly increasing: " + indexed("tau", i) + "=" + format_number(tau[i]) +
                                  " <= " + indexed("tau", i - 1) + "=" + format_number(tau[i - 1]),
                              indexed("tau", i));
        }
    }
}

NodePlacement NodePlacement::uniform(std::size_t intervals, double alpha, bool strict) {
    return NodePlacement{std::vector<double>(intervals, alpha), strict};
}

SplineGrids build_grids(const ControlPolygon& control, const NodePlacement& placement) {
    control.validate();
    const std::size_t n = control.size() - 1;
    if (placement.alpha.size() != n) {
        throw SplineError(ErrorCode::Arity,
                          "alpha has " + std::to_string(placement.alpha.size()) + " entries, expected " +
                              std::to_string(n),
                          "alpha");
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double a = placement.alpha[j];
        if (!std::isfinite(a)) {
            throw SplineError(ErrorCode::NonFinite, indexed("alpha", j) + " is not finite", indexed("alpha", j));
        }
        if (!(a > 0.0 && a < 1.0)) {
            throw SplineError(ErrorCode::Domain, indexed("alpha", j) + "=" + format_number(a) + " outside (0, 1)",
                              indexed("alpha", j));
        }
        if (placement.strict && (a < NodePlacement::kStrictLower || a > NodePlacement::kStrictUpper)) {
            throw SplineError(ErrorCode::Validation,
                              indexed("alpha", j) + "=" + format_number(a) + " outside [1/3, 2/3]",
                              indexed("alpha", j));
        }
    }

    SplineGrids g;
    g.tau = control.tau;
    g.F = control.F;
    g.alpha = placement.alpha;
    g.h.resize(n);
    g.mu.resize(n);
    g.x.resize(n);
    g.f.resize(n);
    g.fp.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double left = control.tau[j];
        const double right = control.tau[j + 1];
        const double h = right - left;
        double x = right - placement.alpha[j] * h;
        // Keep the node strictly inside even when alpha*h underflows against tau.
        if (!(x > left && x < right)) {
            throw SplineError(ErrorCode::Domain,
                              "interior node of interval " + std::to_string(j) + " collapses onto a knot",
                              indexed("alpha", j));
        }
        const double mu = right - x;
        g.h[j] = h;
        g.mu[j] = mu;
        g.x[j] = x;
        // Point of the control-polygon segment at x.
        g.f[j] = (control.F[j] * mu + control.F[j + 1] * (x - left)) / h;
        g.fp[j] = (control.F[j + 1] - control.F[j]) / h;
    }
    return g;
}

SplineCurve::SplineCurve(SplineGrids grids, std::vector<double> phi, std::vector<double> q)
    : grids_(std::move(grids)), phi_(std::move(phi)), q_(std::move(q)) {
    if (phi_.size() != grids_.nodes() || q_.size() != grids_.intervals()) {
        throw SplineError(ErrorCode::Arity, "phi/q lengths do not match the grid");
    }
}

double SplineCurve::scale() const noexcept {
    double s = std::max(1.0, b() - a());
    for (double v : grids_.F) s = std::max(s, std::abs(v));
    return s;
}

std::size_t SplineCurve::locate(double x) const noexcept {
    const auto& tau = grids_.tau;
    auto it = std::upper_bound(tau.begin(), tau.end(), x);
    const auto idx = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - tau.begin() - 1, 0));
    return std::min(idx, intervals() - 1);
}

// Quadratic Lagrange interpolant through (tauL, phiL), (xm, f), (tauR, phiR)
// plus q times the cubic vanishing at all three nodes. Denominators are written
// with the same operations as the numerators so nodes reproduce data exactly.
double SplineCurve::value_on(std::size_t j, double x) const noexcept {
    const double tl = grids_.tau[j];
    const double tr = grids_.tau[j + 1];
    const double xm = grids_.x[j];
    const double wl = ((x - xm) * (x - tr)) / ((tl - xm) * (tl - tr));
    const double wm = ((x - tl) * (x - tr)) / ((xm - tl) * (xm - tr));
    const double wr = ((x - xm) * (x - tl)) / ((tr - xm) * (tr - tl));
    return phi_[j] * wl + grids_.f[j] * wm + phi_[j + 1] * wr + q_[j] * ((x - tl) * (x - xm) * (x - tr));
}

double SplineCurve::slope_on(std::size_t j, double x) const noexcept {
    const double tl = grids_.tau[j];
    const double tr = grids_.tau[j + 1];
    const double xm = grids_.x[j];
    const double dl = ((x - xm) + (x - tr)) / ((tl - xm) * (tl - tr));
    const double dm = ((x - tl) + (x - tr)) / ((xm - tl) * (xm - tr));
    const double dr = ((x - xm) + (x - tl)) / ((tr - xm) * (tr - tl));
    const double dc = (x - tl) * (x - xm) + (x - tl) * (x - tr) + (x - xm) * (x - tr);
    return phi_[j] * dl + grids_.f[j] * dm + phi_[j + 1] * dr + q_[j] * dc;
}

LocalCubic SplineCurve::local_cubic(std::size_t j) const noexcept {
    const double h = grids_.tau[j + 1] - grids_.tau[j];
    const double m = grids_.x[j] - grids_.tau[j];
    const double pl = phi_[j] / (m * h);
    const double pm = grids_.f[j] / (m * (m - h));
    const double pr = phi_[j + 1] / (h * (h - m));
    const double q = q_[j];
    return {
        phi_[j],
        -(m + h) * pl - h * pm - m * pr + q * m * h,
        pl + pm + pr - q * (m + h),
        q,
    };
}

double eval(const SplineCurve& spline, double x) {
    require_in_domain(spline, x);
    return spline.value_on(spline.locate(x), x);
}

double eval_deriv(const SplineCurve& spline, double x) {
    require_in_domain(spline, x);
    return spline.slope_on(spline.locate(x), x);
}

std::vector<double> eval_many(const SplineCurve& spline, std::span<const double> xs) {
    for (double x : xs) require_in_domain(spline, x);
    std::vector<double> ys(xs.size());
    const auto count = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const double x = xs[static_cast<std::size_t>(i)];
        ys[static_cast<std::size_t>(i)] = spline.value_on(spline.locate(x), x);
    }
    return ys;
}

std::vector<double> uniform_grid(double a, double b, std::size_t count) {
    if (count < 2) throw SplineError(ErrorCode::Validation, "sample count must be at least 2", "count");
    std::vector<double> xs(count);
    const double step = (b - a) / static_cast<double>(count - 1);
    for (std::size_t k = 0; k + 1 < count; ++k) xs[k] = a + step * static_cast<double>(k);
    xs.back() = b;
    return xs;
}

std::vector<Sample> sample(const SplineCurve& spline, std::size_t count, bool include_nodes) {
    std::vector<double> xs = uniform_grid(spline.a(), spline.b(), count);
    if (include_nodes) {
        const auto& g = spline.grids();
        xs.insert(xs.end(), g.tau.begin(), g.tau.end());
        xs.insert(xs.end(), g.x.begin(), g.x.end());
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }
    const std::vector<double> ys = eval_many(spline, xs);
    std::vector<Sample> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = {xs[i], ys[i]};
    return out;
}

SplineCurve build_spline(const ControlPolygon& control, const NodePlacement& placement) {
    SplineGrids grids = build_grids(control, placement);
    const TridiagonalSystem system = assemble_system(grids);
    std::vector<double> phi = solve_tridiagonal(system);
    std::vector<double> q = compute_q(grids, phi);
    return SplineCurve(std::move(grids), std::move(phi), std::move(q));
}

}  // namespace bezspline

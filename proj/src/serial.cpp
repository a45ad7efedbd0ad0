#include "bezspline/serial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bezspline::serial {

TridiagonalSystem assemble_system(const SplineGrids& grids) {
    const std::size_t n = grids.nodes();
    TridiagonalSystem sys;
    sys.sub.assign(n, 0.0);
    sys.diag.assign(n, 1.0);
    sys.sup.assign(n, 0.0);
    sys.rhs.assign(n, 0.0);
    sys.rhs.front() = grids.F.front();
    sys.rhs.back() = grids.F.back();

    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = grids.h[i - 1];
        const double m1 = grids.mu[i - 1];
        const double h2 = grids.h[i];
        const double m2 = grids.mu[i];
        const double f1 = grids.f[i - 1];
        const double f2 = grids.f[i];
        const double g1 = h1 - m1;
        const double g2 = h2 - m2;

        const double A = m1 * m1 / (g1 * g1 * h1);
        const double B1 = (2.0 * h1 + m1) / (m1 * h1);
        const double B2 = (3.0 * h2 - m2) / (g2 * h2);
        const double C = g2 * g2 / (h2 * m2 * m2);

        // Left-interval terms keep their textbook sign; the three right-interval
        // terms enter with the opposite sign.
        const double left = -f1 * h1 / (g1 * m1) - f1 * (h1 - 2.0 * m1) * h1 / (g1 * g1 * m1) -
                            (grids.F[i] - grids.F[i - 1]) / g1;
        const double right = -f2 * h2 / (g2 * m2) + f2 * (h2 - 2.0 * m2) * h2 / (g2 * m2 * m2) +
                             (grids.F[i + 1] - grids.F[i]) / m2;

        sys.sub[i] = A;
        sys.diag[i] = -(B1 + B2);
        sys.sup[i] = C;
        sys.rhs[i] = left + right;
    }
    return sys;
}

std::vector<double> compute_q(const SplineGrids& grids, std::span<const double> phi) {
    std::vector<double> q(grids.intervals());
    for (std::size_t j = 0; j < q.size(); ++j) {
        const double h = grids.h[j];
        const double m = grids.mu[j];
        const double g = h - m;
        q[j] = -phi[j] / (g * g * h) + phi[j + 1] / (h * m * m) - grids.f[j] * (h - 2.0 * m) / (g * g * m * m) -
               (grids.F[j + 1] - grids.F[j]) / (h * m * g);
    }
    return q;
}

std::vector<double> eval_many(const SplineCurve& spline, std::span<const double> xs) {
    std::vector<double> ys;
    ys.reserve(xs.size());
    for (double x : xs) ys.push_back(eval(spline, x));
    return ys;
}

double hull_margin(std::span<const Point2> control, std::span<const Point2> samples) {
    double scale = 1.0;
    for (const auto& p : control) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
    const std::vector<Point2> hull = convex_hull(control, 1e-12 * scale);
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& p : samples) margin = std::min(margin, signed_hull_distance(hull, p));
    return margin;
}

}  // namespace bezspline::serial

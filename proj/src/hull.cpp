#include "bezspline/hull.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace bezspline {

namespace {

double cross(Point2 o, Point2 a, Point2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double segment_distance(Point2 a, Point2 b, Point2 p) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

double coordinate_scale(std::span<const Point2> points) {
    double s = 1.0;
    for (const auto& p : points) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return s;
}

}  // namespace

std::vector<Point2> convex_hull(std::span<const Point2> points, double tolerance) {
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;

    // Turn test with the cross product normalised by edge length, so the
    // tolerance is a distance.
    auto left_turn = [tolerance](Point2 o, Point2 a, Point2 b) {
        const double len = std::hypot(a.x - o.x, a.y - o.y);
        return cross(o, a, b) > tolerance * len;
    };

    std::vector<Point2> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && !left_turn(hull[k - 2], hull[k - 1], p)) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && !left_turn(hull[k - 2], hull[k - 1], pts[i])) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double signed_hull_distance(std::span<const Point2> hull, Point2 p) {
    if (hull.empty()) return -std::numeric_limits<double>::infinity();
    if (hull.size() == 1) return -std::hypot(p.x - hull[0].x, p.y - hull[0].y);
    if (hull.size() == 2) return -segment_distance(hull[0], hull[1], p);

    double inside = std::numeric_limits<double>::infinity();
    bool outside = false;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point2 a = hull[i];
        const Point2 b = hull[(i + 1) % hull.size()];
        const double d = cross(a, b, p) / std::hypot(b.x - a.x, b.y - a.y);
        if (d < 0.0) outside = true;
        inside = std::min(inside, d);
    }
    if (!outside) return inside;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        dist = std::min(dist, segment_distance(hull[i], hull[(i + 1) % hull.size()], p));
    }
    return -dist;
}

double hull_margin(std::span<const Point2> control, std::span<const Point2> samples) {
    const std::vector<Point2> hull = convex_hull(control, 1e-12 * coordinate_scale(control));
    double margin = std::numeric_limits<double>::infinity();
    const auto count = static_cast<std::int64_t>(samples.size());
#pragma omp parallel for schedule(static) reduction(min : margin)
    for (std::int64_t i = 0; i < count; ++i) {
        margin = std::min(margin, signed_hull_distance(hull, samples[static_cast<std::size_t>(i)]));
    }
    return margin;
}

std::vector<Point2> to_points(const ControlPolygon& control) {
    std::vector<Point2> pts(control.size());
    for (std::size_t i = 0; i < control.size(); ++i) pts[i] = {control.tau[i], control.F[i]};
    return pts;
}

double hull_check(const ControlPolygon& control, std::span<const Sample> samples) {
    std::vector<Point2> pts(samples.size());
    std::transform(samples.begin(), samples.end(), pts.begin(), [](const Sample& s) { return Point2{s.x, s.y}; });
    return hull_margin(to_points(control), pts);
}

}  // namespace bezspline

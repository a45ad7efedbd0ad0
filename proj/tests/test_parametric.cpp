#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bezspline/parametric.hpp"
#include "oracles.hpp"

using namespace bezspline;

TEST(Parameterize, ChordOnUnitSpacing) {
    const std::vector<Point2> p{{0, 0}, {1, 0}, {1, 1}};
    EXPECT_EQ(parameterize(p, Parameterization::Chord), (std::vector<double>{0, 1, 2}));
}

TEST(Parameterize, ChordThreeFourFive) {
    const std::vector<Point2> p{{0, 0}, {3, 4}};
    EXPECT_EQ(parameterize(p, Parameterization::Chord), (std::vector<double>{0, 5}));
}

TEST(Parameterize, Uniform) {
    const std::vector<Point2> p{{0, 0}, {5, 1}, {5.1, 1}, {-3, 2}};
    EXPECT_EQ(parameterize(p, Parameterization::Uniform), (std::vector<double>{0, 1, 2, 3}));
}

TEST(Parameterize, CoincidentPointsRejectedUnderChord) {
    const std::vector<Point2> p{{0, 0}, {1, 1}, {1, 1}};
    try {
        (void)parameterize(p, Parameterization::Chord);
        FAIL();
    } catch (const SplineError& e) {
        EXPECT_EQ(e.code(), ErrorCode::Validation);
        EXPECT_EQ(e.location(), "points[2]");
    }
}

TEST(BuildParametric, CollinearPointsGiveTheSegment) {
    const std::vector<Point2> p{{0, 0}, {1, 2}, {1.5, 3}, {4, 8}};
    const auto curve = build_parametric(p, NodePlacement::uniform(3));
    for (const auto& s : sample_parametric(curve, 200)) EXPECT_NEAR(s.y, 2.0 * s.x, 1e-9);
}

TEST(BuildParametric, TwoPointsGiveTheSegment) {
    const std::vector<Point2> p{{1, 1}, {4, 5}};
    const auto curve = build_parametric(p, NodePlacement{{0.4}, true});
    for (const auto& s : sample_parametric(curve, 11)) {
        EXPECT_NEAR(s.x, 1.0 + 3.0 * s.t / 5.0, 1e-12);
        EXPECT_NEAR(s.y, 1.0 + 4.0 * s.t / 5.0, 1e-12);
    }
}

TEST(BuildParametric, TangentParallelToEachChordAtInteriorNode) {
    const std::vector<Point2> p{{0, 0}, {1, 0}, {1, 1}};
    const auto curve = build_parametric(p, NodePlacement::uniform(2));
    const auto& g = curve.sx.grids();
    for (std::size_t j = 0; j < g.intervals(); ++j) {
        const double t = g.x[j];
        const double step = 1e-6;
        const Point2 a = curve.point(t - step);
        const Point2 b = curve.point(t + step);
        const double tx = b.x - a.x;
        const double ty = b.y - a.y;
        const double cx = p[j + 1].x - p[j].x;
        const double cy = p[j + 1].y - p[j].y;
        EXPECT_NEAR((tx * cy - ty * cx) / std::hypot(tx, ty), 0.0, 1e-6);
        // the node lies on the chord
        const Point2 at = curve.point(t);
        EXPECT_NEAR((at.x - p[j].x) * cy - (at.y - p[j].y) * cx, 0.0, 1e-12);
    }
}

TEST(SampleParametric, EndpointsReproduceControlEnds) {
    const std::vector<Point2> p{{0, 0}, {2, 3}, {5, -1}, {6, 2}};
    const auto s = sample_parametric(build_parametric(p, NodePlacement::uniform(3)), 50);
    EXPECT_EQ(s.front().x, 0.0);
    EXPECT_EQ(s.front().y, 0.0);
    EXPECT_EQ(s.back().x, 6.0);
    EXPECT_EQ(s.back().y, 2.0);
}

TEST(SampleParametric, ChordAndUniformDifferForUnevenSpacing) {
    const std::vector<Point2> p{{0, 0}, {0.2, 1}, {3, 0}};
    const auto chord = sample_parametric(build_parametric(p, NodePlacement::uniform(2), Parameterization::Chord), 9);
    const auto unif = sample_parametric(build_parametric(p, NodePlacement::uniform(2), Parameterization::Uniform), 9);
    double diff = 0.0;
    for (std::size_t i = 1; i + 1 < chord.size(); ++i) {
        diff = std::max(diff, std::hypot(chord[i].x - unif[i].x, chord[i].y - unif[i].y));
    }
    EXPECT_GT(diff, 1e-3);
}

TEST(BuildParametric, RigidMotionCovariance) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng() % 12;
        std::vector<Point2> p(n);
        for (auto& q : p) q = {u(rng), u(rng)};
        const double angle = u(rng);
        const double ca = std::cos(angle), sa = std::sin(angle);
        const Point2 shift{u(rng), u(rng)};
        auto move = [&](Point2 q) { return Point2{ca * q.x - sa * q.y + shift.x, sa * q.x + ca * q.y + shift.y}; };
        std::vector<Point2> moved(n);
        for (std::size_t i = 0; i < n; ++i) moved[i] = move(p[i]);
        const NodePlacement placement{oracle::random_alpha(rng, n - 1), true};
        const auto a = sample_parametric(build_parametric(p, placement), 64);
        const auto b = sample_parametric(build_parametric(moved, placement), 64);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Point2 expected = move({a[i].x, a[i].y});
            EXPECT_NEAR(b[i].x, expected.x, 1e-9 * 10);
            EXPECT_NEAR(b[i].y, expected.y, 1e-9 * 10);
        }
    }
}

TEST(ParametricHull, SemicircleArcStaysInside) {
    std::vector<Point2> p;
    for (int i = 0; i <= 8; ++i) {
        const double a = M_PI * i / 8.0;
        p.push_back({std::cos(a), std::sin(a)});
    }
    const auto curve = build_parametric(p, NodePlacement::uniform(8));
    EXPECT_GE(parametric_hull_margin(curve, p, 1000), -1e-9);
}

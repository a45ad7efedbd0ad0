#pragma once

// Third-degree Bezier-type spline: a C1 piecewise cubic that touches every
// control-polygon segment at one interior point of its interval.
//
// Indexing is 0-based. Interval j spans [tau[j], tau[j+1]] and carries the
// interior interpolation node x[j] = tau[j+1] - alpha[j] * h[j]. In the usual
// 1-based notation interval j is [tau_{j+1}, tau_{j+2}] and x[j] is x_{j+2}.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "bezspline/error.hpp"

namespace bezspline {

/// Control points (tau_i, F_i). Abscissae must be strictly increasing.
struct ControlPolygon {
    std::vector<double> tau;
    std::vector<double> F;

    [[nodiscard]] std::size_t size() const noexcept { return tau.size(); }

    /// Throws SplineError on N < 2, length mismatch, non-finite values or
    /// non-increasing abscissae.
    void validate() const;
};

/// Per-interval position of the interior node as the fraction
/// alpha[j] = (tau[j+1] - x[j]) / h[j].
struct NodePlacement {
    std::vector<double> alpha;
    /// Restricts alpha to [1/3, 2/3], where the system is provably
    /// diagonally dominant. Outside strict mode only 0 < alpha < 1 is required.
    bool strict = true;

    static NodePlacement uniform(std::size_t intervals, double alpha = 0.5, bool strict = true);

    static constexpr double kStrictLower = 1.0 / 3.0;
    static constexpr double kStrictUpper = 2.0 / 3.0;
};

/// Derived grid data, one entry per interval except tau/F.
struct SplineGrids {
    std::vector<double> tau;
    std::vector<double> F;
    std::vector<double> alpha;
    std::vector<double> h;   ///< tau[j+1] - tau[j]
    std::vector<double> mu;  ///< tau[j+1] - x[j]
    std::vector<double> x;   ///< interior interpolation nodes
    std::vector<double> f;   ///< control-polygon value at x[j]
    std::vector<double> fp;  ///< control-polygon slope on interval j

    [[nodiscard]] std::size_t nodes() const noexcept { return tau.size(); }
    [[nodiscard]] std::size_t intervals() const noexcept { return h.size(); }
};

/// Row k is sub[k]*phi[k-1] + diag[k]*phi[k] + sup[k]*phi[k+1] = rhs[k].
/// sub[0] and sup[N-1] are always zero.
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> sup;
    std::vector<double> rhs;

    [[nodiscard]] std::size_t size() const noexcept { return diag.size(); }
};

/// Power-basis coefficients c0 + c1*u + c2*u^2 + c3*u^3 with u = x - tau[j].
using LocalCubic = std::array<double, 4>;

/// Solved spline. Immutable; safe for concurrent evaluation.
class SplineCurve {
public:
    SplineCurve(SplineGrids grids, std::vector<double> phi, std::vector<double> q);

    [[nodiscard]] const SplineGrids& grids() const noexcept { return grids_; }
    /// Curve values at tau.
    [[nodiscard]] const std::vector<double>& phi() const noexcept { return phi_; }
    /// Cubic (leading) coefficient of each interval.
    [[nodiscard]] const std::vector<double>& q() const noexcept { return q_; }
    [[nodiscard]] double a() const noexcept { return grids_.tau.front(); }
    [[nodiscard]] double b() const noexcept { return grids_.tau.back(); }
    [[nodiscard]] std::size_t intervals() const noexcept { return grids_.intervals(); }

    /// Tolerance scale max(1, max|F|, b - a).
    [[nodiscard]] double scale() const noexcept;

    /// Interval holding x; ties at tau[i] go right, x == b maps to the last interval.
    /// x must already lie in [a, b].
    [[nodiscard]] std::size_t locate(double x) const noexcept;

    /// Value and slope of interval j's cubic, evaluated at any x (no range check).
    [[nodiscard]] double value_on(std::size_t j, double x) const noexcept;
    [[nodiscard]] double slope_on(std::size_t j, double x) const noexcept;

    [[nodiscard]] LocalCubic local_cubic(std::size_t j) const noexcept;

private:
    SplineGrids grids_;
    std::vector<double> phi_;
    std::vector<double> q_;
};

struct Sample {
    double x;
    double y;
    friend bool operator==(const Sample&, const Sample&) = default;
};

SplineGrids build_grids(const ControlPolygon& control, const NodePlacement& placement);

/// Tridiagonal system for the knot values phi. Boundary rows pin
/// phi[0] = F[0] and phi[N-1] = F[N-1].
TridiagonalSystem assemble_system(const SplineGrids& grids);

/// |diag| - |sub| - |sup| for every row.
std::vector<double> check_dominance(const TridiagonalSystem& system);

/// Thomas elimination without pivoting. Throws ErrorCode::Singular naming the row
/// when a pivot vanishes.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& system);

std::vector<double> compute_q(const SplineGrids& grids, std::span<const double> phi);

SplineCurve build_spline(const ControlPolygon& control, const NodePlacement& placement);

/// Throws ErrorCode::Domain outside [a, b].
double eval(const SplineCurve& spline, double x);
double eval_deriv(const SplineCurve& spline, double x);

/// Batch evaluation; every x must lie in [a, b].
std::vector<double> eval_many(const SplineCurve& spline, std::span<const double> xs);

/// `count` uniform abscissae on [a, b]; with include_nodes the tau and x nodes
/// are merged in (sorted, exact duplicates dropped).
std::vector<Sample> sample(const SplineCurve& spline, std::size_t count, bool include_nodes = false);

/// Uniform grid of `count` points on [a, b] with exact endpoints.
std::vector<double> uniform_grid(double a, double b, std::size_t count);

}  // namespace bezspline

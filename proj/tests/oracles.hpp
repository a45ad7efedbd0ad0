#pragma once

// Test-only oracles. Nothing here touches the library's solution path: each
// oracle rebuilds the problem from the raw control data.

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

/// Dense Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(Matrix a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (a[piv][col] == 0.0) throw std::runtime_error("dense_solve: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r][col] / a[col][col];
            if (factor == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
        x[i] = s / a[i][i];
    }
    return x;
}

/// Power-basis cubic per interval, in u = x - tau[j], solved from the full
/// constraint set: value and slope at each interior node (the point of the
/// control segment at tau[j+1] - alpha[j]*h[j], and its slope), value and slope
/// continuity at interior knots, and the two end values.
inline std::vector<std::array<double, 4>> dense_spline(const std::vector<double>& tau, const std::vector<double>& F,
                                                       const std::vector<double>& alpha) {
    const std::size_t intervals = tau.size() - 1;
    const std::size_t n = 4 * intervals;
    Matrix a(n, std::vector<double>(n, 0.0));
    std::vector<double> b(n, 0.0);
    std::size_t row = 0;

    auto value_row = [&](std::size_t j, double u, double sign) {
        a[row][4 * j + 0] += sign;
        a[row][4 * j + 1] += sign * u;
        a[row][4 * j + 2] += sign * u * u;
        a[row][4 * j + 3] += sign * u * u * u;
    };
    auto slope_row = [&](std::size_t j, double u, double sign) {
        a[row][4 * j + 1] += sign;
        a[row][4 * j + 2] += sign * 2.0 * u;
        a[row][4 * j + 3] += sign * 3.0 * u * u;
    };

    for (std::size_t j = 0; j < intervals; ++j) {
        const double h = tau[j + 1] - tau[j];
        const double x = tau[j + 1] - alpha[j] * h;
        const double slope = (F[j + 1] - F[j]) / h;
        const double value = F[j] + slope * (x - tau[j]);
        value_row(j, x - tau[j], 1.0);
        b[row++] = value;
        slope_row(j, x - tau[j], 1.0);
        b[row++] = slope;
    }
    for (std::size_t k = 1; k < intervals; ++k) {
        const double h = tau[k] - tau[k - 1];
        value_row(k - 1, h, 1.0);
        value_row(k, 0.0, -1.0);
        ++row;
        slope_row(k - 1, h, 1.0);
        slope_row(k, 0.0, -1.0);
        ++row;
    }
    value_row(0, 0.0, 1.0);
    b[row++] = F.front();
    value_row(intervals - 1, tau.back() - tau[tau.size() - 2], 1.0);
    b[row++] = F.back();

    const std::vector<double> c = dense_solve(std::move(a), std::move(b));
    std::vector<std::array<double, 4>> out(intervals);
    for (std::size_t j = 0; j < intervals; ++j) out[j] = {c[4 * j], c[4 * j + 1], c[4 * j + 2], c[4 * j + 3]};
    return out;
}

inline double eval_cubic(const std::array<double, 4>& c, double u) {
    return c[0] + u * (c[1] + u * (c[2] + u * c[3]));
}

/// Symmetric tent tau = [0, 1, 2], F = [0, 1, 0], alpha = 1/2. Symmetry forces
/// S'(1) = 0, so the left piece is the cubic with p(0) = 0, p(0.5) = 0.5,
/// p'(0.5) = 1, p'(1) = 0, namely p(x) = -0.8x^3 + 0.8x^2 + 0.8x.
inline double tent_left(double x) { return -0.8 * x * x * x + 0.8 * x * x + 0.8 * x; }
inline double tent_left_slope(double x) { return -2.4 * x * x + 1.6 * x + 0.8; }

/// Random strictly increasing grid with spacings in [0.2, 3].
inline std::vector<double> random_grid(std::mt19937_64& rng, std::size_t n, double start = 0.0) {
    std::uniform_real_distribution<double> step(0.2, 3.0);
    std::vector<double> tau(n);
    tau[0] = start;
    for (std::size_t i = 1; i < n; ++i) tau[i] = tau[i - 1] + step(rng);
    return tau;
}

inline std::vector<double> random_values(std::mt19937_64& rng, std::size_t n, double lo = -5.0, double hi = 5.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

inline std::vector<double> random_alpha(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(1.0 / 3.0, 2.0 / 3.0);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace oracle

#include <cmath>
#include <cstdint>
#include <string>

#include "bezspline/spline.hpp"

namespace bezspline {

// Interior row k equates the one-sided slopes at tau[k] of interval k-1 (left)
// and interval k (right), after eliminating each interval's cubic coefficient
// through its slope condition at the interior node. With m = x - tau_left and
// mu = tau_right - x on each interval:
//
//   A  = mu^2 / (m^2 h)           B1 = (2h + mu) / (mu h)
//   B2 = (2h' + m') / (m' h')      C  = m'^2 / (h' mu'^2)
//   rhs = f h (mu - 2m) / (m^2 mu) - dF / m - f' h' (2mu' - m') / (m' mu'^2) + dF' / mu'
TridiagonalSystem assemble_system(const SplineGrids& grids) {
    const std::size_t n = grids.nodes();
    TridiagonalSystem sys;
    sys.sub.assign(n, 0.0);
    sys.diag.assign(n, 1.0);
    sys.sup.assign(n, 0.0);
    sys.rhs.assign(n, 0.0);
    sys.rhs.front() = grids.F.front();
    sys.rhs.back() = grids.F.back();

    const auto last = static_cast<std::int64_t>(n) - 1;
#pragma omp parallel for schedule(static)
    for (std::int64_t row = 1; row < last; ++row) {
        const auto k = static_cast<std::size_t>(row);
        const std::size_t l = k - 1;
        const std::size_t r = k;

        const double h = grids.h[l];
        const double mu = grids.mu[l];
        const double m = grids.x[l] - grids.tau[l];
        const double hr = grids.h[r];
        const double mur = grids.mu[r];
        const double mr = grids.x[r] - grids.tau[r];

        const double A = (mu * mu) / (m * m * h);
        const double B1 = (2.0 * h + mu) / (mu * h);
        const double B2 = (2.0 * hr + mr) / (mr * hr);
        const double C = (mr * mr) / (hr * mur * mur);

        const double dl = grids.F[k] - grids.F[k - 1];
        const double dr = grids.F[k + 1] - grids.F[k];

        sys.sub[k] = A;
        sys.diag[k] = -(B1 + B2);
        sys.sup[k] = C;
        sys.rhs[k] = grids.f[l] * h * (mu - 2.0 * m) / (m * m * mu) - dl / m -
                     grids.f[r] * hr * (2.0 * mur - mr) / (mr * mur * mur) + dr / mur;
    }
    return sys;
}

std::vector<double> check_dominance(const TridiagonalSystem& system) {
    std::vector<double> margins(system.size());
    for (std::size_t k = 0; k < system.size(); ++k) {
        margins[k] = std::abs(system.diag[k]) - std::abs(system.sub[k]) - std::abs(system.sup[k]);
    }
    return margins;
}

std::vector<double> solve_tridiagonal(const TridiagonalSystem& system) {
    const std::size_t n = system.size();
    if (n == 0) return {};
    if (system.sub.size() != n || system.sup.size() != n || system.rhs.size() != n) {
        throw SplineError(ErrorCode::Arity, "tridiagonal bands have inconsistent lengths");
    }
    std::vector<double> c(n);
    std::vector<double> d(n);

    auto pivot_check = [](double pivot, std::size_t row) {
        if (pivot == 0.0 || !std::isfinite(pivot)) {
            throw SplineError(ErrorCode::Singular, "zero pivot in row " + std::to_string(row),
                              "row " + std::to_string(row));
        }
    };

    pivot_check(system.diag[0], 0);
    c[0] = system.sup[0] / system.diag[0];
    d[0] = system.rhs[0] / system.diag[0];
    for (std::size_t k = 1; k < n; ++k) {
        const double pivot = system.diag[k] - system.sub[k] * c[k - 1];
        pivot_check(pivot, k);
        c[k] = system.sup[k] / pivot;
        d[k] = (system.rhs[k] - system.sub[k] * d[k - 1]) / pivot;
    }
    std::vector<double> phi(n);
    phi[n - 1] = d[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) phi[k] = d[k] - c[k] * phi[k + 1];
    return phi;
}

std::vector<double> compute_q(const SplineGrids& grids, std::span<const double> phi) {
    if (phi.size() != grids.nodes()) {
        throw SplineError(ErrorCode::Arity, "phi has " + std::to_string(phi.size()) + " entries, expected " +
                                                std::to_string(grids.nodes()));
    }
    const std::size_t n = grids.intervals();
    std::vector<double> q(n);
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t jj = 0; jj < count; ++jj) {
        const auto j = static_cast<std::size_t>(jj);
        const double tl = grids.tau[j];
        const double tr = grids.tau[j + 1];
        const double xm = grids.x[j];
        // Slope at xm of the quadratic through (tl, phi_l), (xm, f), (tr, phi_r).
        const double quad_slope = phi[j] * (xm - tr) / ((tl - xm) * (tl - tr)) +
                                  grids.f[j] * ((xm - tl) + (xm - tr)) / ((xm - tl) * (xm - tr)) +
                                  phi[j + 1] * (xm - tl) / ((tr - xm) * (tr - tl));
        q[j] = (grids.fp[j] - quad_slope) / ((xm - tl) * (xm - tr));
    }
    return q;
}

}  // namespace bezspline

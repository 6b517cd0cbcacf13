#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace strichartz {

/// Nodes and weights of an n-point quadrature rule on [a, b].
struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]. Results are cached per n;
/// the cache is guarded, so concurrent callers are fine.
const QuadRule& gauss_legendre(std::size_t n);

/// Gauss-Legendre rule mapped to [a, b].
QuadRule gauss_legendre(std::size_t n, double a, double b);

/// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b] to the
/// requested absolute tolerance. Throws std::runtime_error when the
/// subdivision budget is exhausted before the tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, std::size_t max_intervals = 200000);

/// Same, but the interval is pre-split at the given interior points
/// (e.g. stationary points of an oscillatory phase).
double integrate_adaptive_split(const std::function<double(double)>& f, double a, double b,
                                const std::vector<double>& split_points, double abs_tol,
                                std::size_t max_intervals = 200000);

/// Composite fixed-order Gauss-Legendre: [a, b] cut into panels of width
/// at most max_panel_width, points_per_panel nodes each. Intended for
/// integrands with a known oscillation scale.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        double max_panel_width, std::size_t points_per_panel = 8);

} // namespace strichartz

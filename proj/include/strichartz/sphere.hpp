#pragma once

#include <cstdint>

namespace strichartz {

/// Surface measure of the unit sphere S^m in R^{m+1}.
double sphere_area(int m);

/// Gegenbauer polynomial C_k^{(n-2)/2}(t) by the three-term recurrence;
/// for n = 2 the Chebyshev convention T_k(t).
double gegenbauer_eval(int n, int k, double t);

/// Dimension d(k) of the space of spherical harmonics of order k on S^{n-1}:
/// d(0) = 1, d(k) = C(n+k-1, k) - C(n+k-3, k-2).
std::int64_t harmonic_dimension(int n, int k);

/// The zonal spherical harmonic of degree k on S^{n-1}, normalized to unit
/// L^2(S^{n-1}) norm. Evaluation is in t = cos(angle to the pole).
class ZonalHarmonic {
public:
    ZonalHarmonic(int n, int k);

    int dim() const { return n_; }
    int degree() const { return k_; }
    double eigenvalue() const { return static_cast<double>(k_) * (k_ + n_ - 2); }

    double operator()(double t) const;

    /// ||Y_k||_{L^p(S^{n-1})} by 1D quadrature in the polar angle
    /// (sup at the pole for p = infinity). p >= 1 or infinite.
    double lp_norm(double p) const;

private:
    int n_, k_;
    double scale_;  // 1 / ||C_k||_{L^2(S^{n-1})}
};

} // namespace strichartz

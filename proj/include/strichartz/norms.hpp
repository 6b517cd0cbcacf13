#pragma once

#include "strichartz/dispersion.hpp"
#include "strichartz/grid.hpp"

namespace strichartz {

/// Mixed norm L^q_t L^p(r^{n-1} dr): inner radial integral by the
/// trapezoid rule on the field's own grid, then the q-norm over t.
/// p or q may be infinite (grid max; a lower bound of the true sup).
struct MixedNormSpec {
    double p = 2.0;
    double q = 2.0;
    int n = 2;
};

double mixed_norm(const SpaceTimeField& u, const MixedNormSpec& spec);

/// Radial p-norm of one time slice.
double radial_norm(const SpaceTimeField& u, std::size_t t_index, double p, int n);

/// Full L^p_x norm factorization for a single-harmonic field:
/// mixed_norm of the radial factor times ||Y_k||_{L^p(S^{n-1})}.
/// Requires the field's harmonic tag (std::invalid_argument otherwise).
double full_space_norm(const SpaceTimeField& radial_factor, const MixedNormSpec& spec);

/// Frequency-side data norm for a degree-k block:
///   (1 + k(k+n-2))^{alpha/2} || rho^s (omega'/rho)^{s1} |omega''|^{s2} a ||_{L^2(rho^{n-1} drho)}.
/// Requires |s| < n/2.
double data_norm(const RadialProfile& a, int n, int k, double s, double alpha,
                 const DispersionRelation& rel, double s1, double s2);

/// Same with the multiplier read at physical frequency N*rho and the
/// measure carrying the physical weight (N rho)^{n-1} d(N rho); used by
/// the cross-band probes.
double data_norm_at_band(const RadialProfile& a, int n, int k, double s, double alpha,
                         const DispersionRelation& rel, double s1, double s2, double N);

/// Deterministic pairwise (fixed binary tree) summation; the reduction
/// order is independent of thread count.
double pairwise_sum(const std::vector<double>& v);

} // namespace strichartz

#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace strichartz {

using Complex = std::complex<double>;
using RealFn = std::function<double(double)>;

/// The fixed frequency cutoff: exp(1 - 1/(1 - z^2)) in z = (4 rho - 5)/3,
/// supported exactly on (1/2, 2), peak 1 at rho = 5/4.
double standard_bump(double rho);

/// Constant 1; for profiles that carry their own cutoff.
double unit_bump(double rho);

/// A radial frequency profile h(rho) sampled on a quadrature grid inside
/// the unit annulus [1/2, 2].
struct RadialProfile {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<Complex> values;

    std::size_t size() const { return nodes.size(); }

    /// L^2(d rho) norm of the samples.
    double l2_norm() const;
    /// L^2(rho^{n-1} d rho) norm.
    double weighted_l2_norm(int n) const;
};

/// Sample fn on an m-point Gauss-Legendre rule over [lo, hi] in [1/2, 2].
RadialProfile make_profile(const std::function<Complex(double)>& fn, std::size_t m,
                           double lo = 0.5, double hi = 2.0);

/// Node count rule for targets up to radius r_max: 32 + ceil(6 r_max),
/// about 25 nodes per wavelength of e^{i r rho} at the largest radius.
std::size_t profile_nodes_for(double r_max);

/// Tensor (t, r) evaluation grid with the ambient dimension attached.
struct SpaceTimeGrid {
    std::vector<double> t_nodes;
    std::vector<double> r_nodes;
    int n = 2;

    static SpaceTimeGrid uniform(double t0, double t1, std::size_t nt, double r0, double r1,
                                 std::size_t nr, int n);

    double t_spacing() const;
    double r_spacing() const;

    /// Sampling requirements: r-spacing <= pi/8 (Nyquist for e^{i r rho},
    /// rho <= 2) and t-spacing <= pi/(4 max
    /// |varpi|). Throws std::invalid_argument on violation.
    void require_sampling(double max_abs_phase) const;
};

/// Complex field values on a SpaceTimeGrid, row-major over t.
struct SpaceTimeField {
    SpaceTimeGrid grid;
    std::vector<Complex> values;
    std::optional<int> harmonic_index;

    Complex& at(std::size_t it, std::size_t ir) { return values[it * grid.r_nodes.size() + ir]; }
    const Complex& at(std::size_t it, std::size_t ir) const
    {
        return values[it * grid.r_nodes.size() + ir];
    }
};

} // namespace strichartz

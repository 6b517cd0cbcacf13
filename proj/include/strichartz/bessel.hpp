#pragma once

#include <cstddef>
#include <vector>

namespace strichartz {

/// Bessel order nu(k) = (n - 2 + 2k) / 2 attached to the k-th spherical
/// harmonic block in dimension n. Such orders are 0 or >= 1/2.
struct BesselOrder {
    double nu;

    explicit BesselOrder(double nu_) : nu(nu_) {}
    static BesselOrder from_harmonic(int n, int k);
};

enum class Regime {
    SmallArg,     // r <~ 1 or r << nu: ascending series territory
    Transition,   // nu <~ r < 4 nu^(8/5)
    Oscillatory,  // r >= max(4 nu^(8/5), r_min)
};

/// Regime boundaries used verbatim by the fast-path dispatch:
/// SmallArg for r <= max(8, 0.7 nu), Oscillatory for r >= max(18, 4 nu^(8/5)),
/// Transition in between.
Regime classify_regime(double nu, double r);

/// J_nu(r) to the requested absolute accuracy (default 1e-12): ascending
/// power series with compensated summation in the SmallArg range, adaptive
/// Gauss-Kronrod quadrature of Schlafli's representation
///   J_nu(r) = (1/pi) int_0^pi cos(r sin t - nu t) dt
///           - (sin(nu pi)/pi) int_0^inf exp(-nu t - r sinh t) dt
/// otherwise, split at the stationary point of the oscillatory phase.
/// Throws std::domain_error for negative arguments and std::runtime_error
/// when adaptive refinement exhausts its budget.
double j_oracle(double nu, double r, double precision_target = 1e-12);

/// Fast evaluation: series / Schlafli quadrature / Hankel asymptotic
/// expansion, dispatched by classify_regime. Absolute accuracy ~1e-11
/// over nu <= 50; cross-checked against j_oracle in the test suite.
double j_fast(double nu, double r);

/// Phase theta(r) = r [ (1 - nu^2/r^2)^(1/2) - (nu/r)(pi/2 - arccos(nu/r)) ]
/// of the stationary-phase representation. Requires r > nu.
double theta_phase(double nu, double r);

/// Two-term large-argument main part
///   2 Re[ (c_nu r^(-1/2) + i c_nu (4 nu^2 - 1)/8 r^(-3/2)) e^(ir) ],
///   c_nu = e^{-i(pi/4 + nu pi/2)} / sqrt(2 pi),
/// i.e. sqrt(2/(pi r)) [cos(chi) - (4 nu^2 - 1)/(8 r) sin(chi)] with
/// chi = r - nu pi/2 - pi/4. Valid for r >= 4 nu^(8/5); the remainder is
/// O(1/r) with a small constant (audited against j_oracle).
double asymptotic_main(double nu, double r);

/// sup over the grid of r * |J_nu(r) - asymptotic_main(nu, r)|, the
/// empirical remainder constant. All grid points must satisfy
/// r >= 4 nu^(8/5).
double residual_audit(double nu, const std::vector<double>& r_grid);

/// Log-spaced grid helper for the audits.
std::vector<double> log_grid(double lo, double hi, std::size_t count);

struct DecayFit {
    double rate;       // fitted c in |J_nu(f nu)| <= e^{-c nu}
    double intercept;  // of the linear fit of -log|J| against nu
};

/// Least-squares fit of -log|J_nu(fraction nu)| = c nu + b over the nu grid.
/// Requires fraction <= 1/2.
DecayFit decay_audit(double fraction, const std::vector<double>& nu_grid);

/// int_R^{2R} |J_nu(r)|^2 dr by composite quadrature on the fast path.
double square_function_integral(double nu, double R);

/// int_0^{r_max} J_nu(r)^2 dr / r; approaches 1/(2 nu). Requires
/// r_max >= 100 max(1, nu).
double normalization_integral(double nu, double r_max);

/// J_nu(r_i * rho_j) tabulated for a tensor grid, row-major over r.
/// The OpenMP kernel and the plain serial reference compute identical
/// values cell for cell.
std::vector<double> bessel_table(double nu, const std::vector<double>& r_nodes,
                                 const std::vector<double>& rho_nodes);
std::vector<double> bessel_table_serial(double nu, const std::vector<double>& r_nodes,
                                        const std::vector<double>& rho_nodes);

} // namespace strichartz

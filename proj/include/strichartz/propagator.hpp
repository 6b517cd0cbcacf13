#pragma once

#include "strichartz/bessel.hpp"
#include "strichartz/dispersion.hpp"
#include "strichartz/grid.hpp"

namespace strichartz {

/// Frequency-normalized solution block on the unit annulus:
///   u(t, r) = r^{-(n-2)/2} int e^{-i t varpi(rho)} J_nu(r rho) rho^{n/2}
///             beta(rho) h(rho) d rho,
/// evaluated on the tensor grid by quadrature over the profile nodes.
/// Requires >= 10 profile nodes per wavelength of e^{i r rho} at the
/// largest grid radius (std::invalid_argument otherwise).
SpaceTimeField t_nu(const RadialProfile& h, BesselOrder nu, const RescaledProfile& varpi,
                    const SpaceTimeGrid& grid, const RealFn& bump = standard_bump);

/// Dyadic-shell operator: same integrand without the rho^{n/2} factor,
/// restricted to r in [R, 2R). The grid's r-nodes must lie in the shell.
SpaceTimeField t_r_nu(const RadialProfile& h, BesselOrder nu, const RescaledProfile& varpi,
                      double R, const SpaceTimeGrid& grid, const RealFn& bump = standard_bump);

/// Radial factor of the degree-k single-harmonic solution:
/// c_{n,k} T^{nu(k)} h with c_{n,k} = (2 pi)^{n/2} i^{-k}. The angular
/// factor is applied by the norm layer.
SpaceTimeField single_harmonic_solution(const RadialProfile& a, int n, int k,
                                        const RescaledProfile& varpi, const SpaceTimeGrid& grid,
                                        const RealFn& bump = standard_bump);

/// Knapp frequency profile phi-hat(rho) = rho^{-(n-1)/2} phi(R^{1/2} (rho - rho0))
/// on a Gauss-Legendre rule across the R^{-1/2} window (node count grows
/// like sqrt(R), at least 64). phi is the standard bump on (-1, 1).
/// Throws std::domain_error when the window leaves [1/2, 2].
RadialProfile knapp_data(double R, double rho0, int n);

/// Exact L^2(R^n) norm of the Knapp datum (Plancherel):
/// (2 pi)^{-n/2} (|S^{n-1}| R^{-1/2} int phi^2 dz)^{1/2}.
double knapp_l2_norm(double R, int n);

/// General assembly kernel shared by the operators above:
///   out(i, j) = sum_l A(j, l) e^{-i t_i phase_l} h_l,
/// where the real matrix A bakes the J-table together with the quadrature
/// weights and all rho- and r-dependent factors. OpenMP-parallel over grid
/// rows; the serial reference computes bit-identical values.
void assemble_field(const std::vector<double>& t_nodes, const std::vector<double>& phase,
                    const std::vector<double>& a_matrix, const std::vector<Complex>& h,
                    std::size_t n_r, std::vector<Complex>& out);
void assemble_field_serial(const std::vector<double>& t_nodes, const std::vector<double>& phase,
                           const std::vector<double>& a_matrix, const std::vector<Complex>& h,
                           std::size_t n_r, std::vector<Complex>& out);

/// Evaluate the block on arbitrary (t, r) pairs (used for slanted tube
/// grids). points is a flat list of (t, r).
std::vector<Complex> t_nu_at_points(const RadialProfile& h, BesselOrder nu,
                                    const RescaledProfile& varpi,
                                    const std::vector<std::pair<double, double>>& points, int n,
                                    const RealFn& bump = standard_bump,
                                    bool include_rho_power = true);

} // namespace strichartz

#include "strichartz/propagator.hpp"

#include "strichartz/quadrature.hpp"
#include "strichartz/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace strichartz {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_resolution(const RadialProfile& h, double r_max)
{
    if (h.size() < 2) throw std::invalid_argument("profile needs at least 2 nodes");
    const double span = h.nodes.back() - h.nodes.front();
    const double wavelengths = std::abs(r_max) * span / (2.0 * kPi);
    if (static_cast<double>(h.size()) < 10.0 * wavelengths)
        throw std::invalid_argument(
            "profile under-resolved: fewer than 10 nodes per wavelength at the largest radius");
}

// A(j, l) = w_l beta(rho_l) rho_l^pow J_nu(r_j rho_l) r_j^{-(n-2)/2}
std::vector<double> build_a_matrix(const RadialProfile& h, BesselOrder nu,
                                   const std::vector<double>& r_nodes, int n, const RealFn& bump,
                                   double rho_power)
{
    const std::size_t L = h.size();
    std::vector<double> node_factor(L);
    for (std::size_t l = 0; l < L; ++l)
        node_factor[l] = h.weights[l] * bump(h.nodes[l]) * std::pow(h.nodes[l], rho_power);

    std::vector<double> jt = bessel_table(nu.nu, r_nodes, h.nodes);
    const double rexp = -0.5 * (n - 2);
    for (std::size_t j = 0; j < r_nodes.size(); ++j) {
        const double rf = r_nodes[j] > 0.0 ? std::pow(r_nodes[j], rexp) : (n == 2 ? 1.0 : 0.0);
        for (std::size_t l = 0; l < L; ++l) jt[j * L + l] *= rf * node_factor[l];
    }
    return jt;
}

std::vector<double> phase_samples(const RescaledProfile& varpi, const RadialProfile& h)
{
    std::vector<double> phase(h.size());
    for (std::size_t l = 0; l < h.size(); ++l) phase[l] = varpi(h.nodes[l]);
    return phase;
}

double max_abs_phase(const RescaledProfile& varpi, const RadialProfile& h)
{
    double m = 0.0;
    for (double rho : h.nodes) m = std::max(m, std::abs(varpi(rho)));
    return m;
}

void assemble_rows(const std::vector<double>& t_nodes, const std::vector<double>& phase,
                   const std::vector<double>& a_matrix, const std::vector<Complex>& h,
                   std::size_t n_r, std::vector<Complex>& out, bool parallel)
{
    const std::size_t L = h.size(), T = t_nodes.size();
    out.assign(T * n_r, Complex(0.0, 0.0));

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::size_t i = 0; i < T; ++i) {
        std::vector<Complex> ph(L);
        for (std::size_t l = 0; l < L; ++l) {
            const double arg = -t_nodes[i] * phase[l];
            ph[l] = Complex(std::cos(arg), std::sin(arg)) * h[l];
        }
        for (std::size_t j = 0; j < n_r; ++j) {
            const double* a = &a_matrix[j * L];
            double re = 0.0, im = 0.0;
            for (std::size_t l = 0; l < L; ++l) {
                re += a[l] * ph[l].real();
                im += a[l] * ph[l].imag();
            }
            out[i * n_r + j] = Complex(re, im);
        }
    }
#ifndef _OPENMP
    (void)parallel;
#endif
}

SpaceTimeField run_block(const RadialProfile& h, BesselOrder nu, const RescaledProfile& varpi,
                         const SpaceTimeGrid& grid, const RealFn& bump, double rho_power)
{
    const double r_max = grid.r_nodes.empty() ? 0.0 : std::abs(grid.r_nodes.back());
    require_resolution(h, r_max);
    grid.require_sampling(max_abs_phase(varpi, h));

    SpaceTimeField field;
    field.grid = grid;
    std::vector<double> a = build_a_matrix(h, nu, grid.r_nodes, grid.n, bump, rho_power);
    assemble_field(grid.t_nodes, phase_samples(varpi, h), a, h.values, grid.r_nodes.size(),
                   field.values);
    return field;
}

} // namespace

void assemble_field(const std::vector<double>& t_nodes, const std::vector<double>& phase,
                    const std::vector<double>& a_matrix, const std::vector<Complex>& h,
                    std::size_t n_r, std::vector<Complex>& out)
{
    assemble_rows(t_nodes, phase, a_matrix, h, n_r, out, true);
}

void assemble_field_serial(const std::vector<double>& t_nodes, const std::vector<double>& phase,
                           const std::vector<double>& a_matrix, const std::vector<Complex>& h,
                           std::size_t n_r, std::vector<Complex>& out)
{
    assemble_rows(t_nodes, phase, a_matrix, h, n_r, out, false);
}

SpaceTimeField t_nu(const RadialProfile& h, BesselOrder nu, const RescaledProfile& varpi,
                    const SpaceTimeGrid& grid, const RealFn& bump)
{
    return run_block(h, nu, varpi, grid, bump, 0.5 * grid.n);
}

SpaceTimeField t_r_nu(const RadialProfile& h, BesselOrder nu, const RescaledProfile& varpi,
                      double R, const SpaceTimeGrid& grid, const RealFn& bump)
{
    if (!(R >= 1.0)) throw std::invalid_argument("t_r_nu: need R >= 1");
    for (double r : grid.r_nodes)
        if (r < R || r >= 2.0 * R)
            throw std::invalid_argument("t_r_nu: grid must lie in the shell [R, 2R)");
    return run_block(h, nu, varpi, grid, bump, 0.0);
}

SpaceTimeField single_harmonic_solution(const RadialProfile& a, int n, int k,
                                        const RescaledProfile& varpi, const SpaceTimeGrid& grid,
                                        const RealFn& bump)
{
    if (grid.n != n) throw std::invalid_argument("single_harmonic_solution: grid dimension mismatch");
    SpaceTimeField field = t_nu(a, BesselOrder::from_harmonic(n, k), varpi, grid, bump);
    // c_{n,k} = (2 pi)^{n/2} i^{-k}
    const Complex i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    const Complex c = std::pow(2.0 * kPi, 0.5 * n) * i_pow[k % 4];
    for (Complex& v : field.values) v *= c;
    field.harmonic_index = k;
    return field;
}

RadialProfile knapp_data(double R, double rho0, int n)
{
    if (!(R >= 16.0)) throw std::domain_error("knapp_data: need R >= 16");
    const double w = 1.0 / std::sqrt(R);
    if (rho0 - w < 0.5 || rho0 + w > 2.0)
        throw std::domain_error("knapp_data: window [rho0 - R^-1/2, rho0 + R^-1/2] leaves [1/2, 2]");

    // Node budget: >= 10 per wavelength of e^{i r rho} across the window
    // for r up to ~3R, with margin, and a floor of 64.
    const std::size_t m = std::max<std::size_t>(
        64, static_cast<std::size_t>(std::ceil(12.0 * std::sqrt(R))));
    const double sqrtR = std::sqrt(R);
    auto fn = [rho0, sqrtR, n](double rho) -> Complex {
        const double z = sqrtR * (rho - rho0);
        if (std::abs(z) >= 1.0) return {0.0, 0.0};
        return {std::pow(rho, -0.5 * (n - 1)) * std::exp(1.0 - 1.0 / (1.0 - z * z)), 0.0};
    };
    return make_profile(fn, m, rho0 - w, rho0 + w);
}

double knapp_l2_norm(double R, int n)
{
    // int phi(z)^2 dz for the normalized bump, fixed once by quadrature.
    static const double phi2 = integrate_panels(
        [](double z) {
            double v = std::abs(z) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - z * z)) : 0.0;
            return v * v;
        },
        -1.0, 1.0, 0.05, 8);
    return std::pow(2.0 * kPi, -0.5 * n) * std::sqrt(sphere_area(n - 1) * phi2 / std::sqrt(R));
}

std::vector<Complex> t_nu_at_points(const RadialProfile& h, BesselOrder nu,
                                    const RescaledProfile& varpi,
                                    const std::vector<std::pair<double, double>>& points, int n,
                                    const RealFn& bump, bool include_rho_power)
{
    double r_max = 0.0;
    for (const auto& [t, r] : points) r_max = std::max(r_max, std::abs(r));
    require_resolution(h, r_max);

    const std::size_t L = h.size();
    std::vector<double> node_factor(L), phase(L);
    const double rho_power = include_rho_power ? 0.5 * n : 0.0;
    for (std::size_t l = 0; l < L; ++l) {
        node_factor[l] = h.weights[l] * bump(h.nodes[l]) * std::pow(h.nodes[l], rho_power);
        phase[l] = varpi(h.nodes[l]);
    }
    const double rexp = -0.5 * (n - 2);

    std::vector<Complex> out(points.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double t = points[i].first, r = points[i].second;
        const double rf = r > 0.0 ? std::pow(r, rexp) : (n == 2 ? 1.0 : 0.0);
        double re = 0.0, im = 0.0;
        for (std::size_t l = 0; l < L; ++l) {
            const double j = j_fast(nu.nu, r * h.nodes[l]);
            const double arg = -t * phase[l];
            const Complex ph = Complex(std::cos(arg), std::sin(arg)) * h.values[l];
            const double a = node_factor[l] * j;
            re += a * ph.real();
            im += a * ph.imag();
        }
        out[i] = Complex(rf * re, rf * im);
    }
    return out;
}

} // namespace strichartz

#include "strichartz/bessel.hpp"

#include "strichartz/quadrature.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace strichartz {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Series applies below this radius, the Hankel expansion above the
// oscillatory threshold, Schlafli quadrature in between. The 0.7 nu cap
// keeps the alternating series' cancellation below ~1e-13 absolute
// (sum of |terms| is I_nu(r), which stays O(1) up to r ~ 0.66 nu).
double series_limit(double nu) { return std::max(8.0, 0.7 * nu); }
double oscillatory_limit(double nu) { return std::max(18.0, 4.0 * std::pow(nu, 1.6)); }

// The Hankel P/Q series needs r somewhat beyond nu^2 to reach 1e-12;
// below the oscillatory threshold for nu <= 22, above it after that.
double hankel_limit(double nu) { return std::max(oscillatory_limit(nu), 1.2 * nu * nu); }

void check_args(double nu, double r)
{
    if (!(nu >= 0.0)) throw std::domain_error("bessel: nu must be >= 0");
    if (!(r >= 0.0)) throw std::domain_error("bessel: r must be >= 0");
}

// Ascending series J_nu(r) = sum (-1)^m (r/2)^{nu+2m} / (m! Gamma(nu+m+1))
// with Kahan summation; the leading coefficient goes through lgamma to
// survive large nu.
double j_series(double nu, double r)
{
    if (r == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double x = 0.5 * r;
    double term = std::exp(nu * std::log(x) - std::lgamma(nu + 1.0));
    double sum = 0.0, comp = 0.0;
    for (int m = 0; m < 500; ++m) {
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        term *= -(x * x) / ((m + 1.0) * (nu + m + 1.0));
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

// Oscillatory Schlafli integral (1/pi) int_0^pi cos(r sin t - nu t) dt,
// split at the stationary point t* = arccos(nu/r) when r > nu.
double schlafli_main(double nu, double r, double tol, std::size_t budget)
{
    std::vector<double> splits;
    if (r > nu) {
        double c = std::clamp(nu / r, -1.0, 1.0);
        splits.push_back(std::acos(c));
    }
    auto f = [nu, r](double t) { return std::cos(r * std::sin(t) - nu * t); };
    return integrate_adaptive_split(f, 0.0, kPi, splits, tol * kPi, budget) / kPi;
}

// Tail term -(sin(nu pi)/pi) int_0^inf exp(-nu t - r sinh t) dt. Vanishes
// for integer nu; the integrand dies once r sinh t + nu t is large.
double schlafli_tail(double nu, double r, double tol, std::size_t budget)
{
    const double s = std::sin(nu * kPi);
    if (s == 0.0) return 0.0;
    const double scale = std::max(r, nu);
    double t_max = std::asinh(60.0 / scale) + 60.0 / (scale + 1.0);
    t_max = std::min(t_max, 60.0);
    auto f = [nu, r](double t) { return std::exp(-nu * t - r * std::sinh(t)); };
    double integral = integrate_adaptive(f, 0.0, t_max, tol, budget);
    return -s / kPi * integral;
}

double j_quadrature(double nu, double r, double tol)
{
    const std::size_t budget = 400000;
    return schlafli_main(nu, r, 0.5 * tol, budget) + schlafli_tail(nu, r, 0.5 * tol, budget);
}

// Hankel's asymptotic expansion: J_nu(r) ~ sqrt(2/(pi r)) (P cos chi - Q sin chi),
// a_k = prod_{j<k} (mu - (2j+1)^2) / (k 8), mu = 4 nu^2. Truncated at the
// smallest term; callers stay inside hankel_limit so the floor is ~1e-13.
double j_hankel(double nu, double r)
{
    const double mu = 4.0 * nu * nu;
    const double chi = r - nu * kPi / 2.0 - kPi / 4.0;
    double p = 1.0, q = 0.0;
    double ak = 1.0;
    double last = 1.0;
    for (int k = 1; k <= 30; ++k) {
        double odd = 2.0 * k - 1.0;
        ak *= (mu - odd * odd) / (8.0 * k * r);
        if (std::abs(ak) >= last) break; // divergence onset
        last = std::abs(ak);
        switch (k % 4) {
            case 0: p += ak; break;
            case 1: q += ak; break;
            case 2: p -= ak; break;
            case 3: q -= ak; break;
        }
        if (last < 1e-17) break;
    }
    return std::sqrt(2.0 / (kPi * r)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace

BesselOrder BesselOrder::from_harmonic(int n, int k)
{
    if (n < 2 || k < 0) throw std::domain_error("BesselOrder: need n >= 2, k >= 0");
    return BesselOrder((n - 2 + 2 * k) / 2.0);
}

Regime classify_regime(double nu, double r)
{
    check_args(nu, r);
    if (r <= series_limit(nu)) return Regime::SmallArg;
    if (r >= oscillatory_limit(nu)) return Regime::Oscillatory;
    return Regime::Transition;
}

double j_oracle(double nu, double r, double precision_target)
{
    check_args(nu, r);
    if (r <= series_limit(nu)) return j_series(nu, r);
    return j_quadrature(nu, r, precision_target);
}

double j_fast(double nu, double r)
{
    check_args(nu, r);
    switch (classify_regime(nu, r)) {
        case Regime::SmallArg:
            return j_series(nu, r);
        case Regime::Oscillatory:
            if (r >= hankel_limit(nu)) return j_hankel(nu, r);
            [[fallthrough]];
        case Regime::Transition:
        default:
            return j_quadrature(nu, r, 1e-12);
    }
}

double theta_phase(double nu, double r)
{
    if (!(nu >= 0.0)) throw std::domain_error("theta_phase: nu must be >= 0");
    if (!(r > nu)) throw std::domain_error("theta_phase: need r > nu");
    double c = nu / r;
    // Absorb rounding at r ~ nu.
    c = std::clamp(c, -1.0, 1.0);
    return std::sqrt(r * r - nu * nu) - nu * (kPi / 2.0 - std::acos(c));
}

double asymptotic_main(double nu, double r)
{
    if (!(nu >= 0.5)) throw std::domain_error("asymptotic_main: need nu >= 1/2");
    if (!(r >= 4.0 * std::pow(nu, 1.6)))
        throw std::domain_error("asymptotic_main: need r >= 4 nu^(8/5)");
    const double chi = r - nu * kPi / 2.0 - kPi / 4.0;
    const double a1 = (4.0 * nu * nu - 1.0) / 8.0;
    return std::sqrt(2.0 / (kPi * r)) * (std::cos(chi) - a1 / r * std::sin(chi));
}

double residual_audit(double nu, const std::vector<double>& r_grid)
{
    double worst = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
#endif
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        double r = r_grid[i];
        double res = r * std::abs(j_oracle(nu, r) - asymptotic_main(nu, r));
        worst = std::max(worst, res);
    }
    return worst;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count)
{
    std::vector<double> g(count);
    const double l0 = std::log(lo), l1 = std::log(hi);
    for (std::size_t i = 0; i < count; ++i)
        g[i] = std::exp(l0 + (l1 - l0) * (count > 1 ? double(i) / (count - 1) : 0.0));
    return g;
}

DecayFit decay_audit(double fraction, const std::vector<double>& nu_grid)
{
    if (!(fraction > 0.0 && fraction <= 0.5))
        throw std::domain_error("decay_audit: need fraction in (0, 1/2]");
    if (nu_grid.size() < 2) throw std::invalid_argument("decay_audit: need >= 2 orders");
    // Linear regression of y = -log|J_nu(f nu)| on nu.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double nu : nu_grid) {
        double j = std::abs(j_oracle(nu, fraction * nu));
        double y = -std::log(std::max(j, 1e-300));
        sx += nu;
        sy += y;
        sxx += nu * nu;
        sxy += nu * y;
    }
    const double m = nu_grid.size();
    double rate = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    double intercept = (sy - rate * sx) / m;
    return {rate, intercept};
}

double square_function_integral(double nu, double R)
{
    if (!(R > 0.0)) throw std::domain_error("square_function_integral: need R > 0");
    auto f = [nu](double r) {
        double j = j_fast(nu, r);
        return j * j;
    };
    // Half-period panels resolve the cos^2 oscillation of |J|^2.
    return integrate_panels(f, R, 2.0 * R, kPi / 2.0, 8);
}

double normalization_integral(double nu, double r_max)
{
    if (!(nu >= 0.5)) throw std::domain_error("normalization_integral: need nu >= 1/2");
    if (!(r_max >= 100.0 * std::max(1.0, nu)))
        throw std::domain_error("normalization_integral: r_max too small");
    auto f = [nu](double r) {
        double j = j_fast(nu, r);
        return j * j / r;
    };
    // The integrand is r^{2 nu - 1} near zero, regular for nu >= 1/2.
    double head = integrate_panels(f, 0.0, 8.0, 0.5, 12);
    double rest = integrate_panels(f, 8.0, r_max, kPi / 2.0, 8);
    return head + rest;
}

std::vector<double> bessel_table(double nu, const std::vector<double>& r_nodes,
                                 const std::vector<double>& rho_nodes)
{
    std::vector<double> table(r_nodes.size() * rho_nodes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < r_nodes.size(); ++i)
        for (std::size_t j = 0; j < rho_nodes.size(); ++j)
            table[i * rho_nodes.size() + j] = j_fast(nu, r_nodes[i] * rho_nodes[j]);
    return table;
}

std::vector<double> bessel_table_serial(double nu, const std::vector<double>& r_nodes,
                                        const std::vector<double>& rho_nodes)
{
    std::vector<double> table(r_nodes.size() * rho_nodes.size());
    for (std::size_t i = 0; i < r_nodes.size(); ++i)
        for (std::size_t j = 0; j < rho_nodes.size(); ++j)
            table[i * rho_nodes.size() + j] = j_fast(nu, r_nodes[i] * rho_nodes[j]);
    return table;
}

} // namespace strichartz

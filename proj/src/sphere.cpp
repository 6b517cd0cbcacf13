#include "strichartz/sphere.hpp"

#include "strichartz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace strichartz {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Binomial coefficient, exact in int64 for the ranges used here.
std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t res = 1;
    for (std::int64_t i = 1; i <= k; ++i) res = res * (n - k + i) / i;
    return res;
}

// int_0^pi g(cos theta) sin^{n-2}(theta) dtheta with Gauss-Legendre in
// theta, doubling the node count until two passes agree.
template <typename F>
double polar_integral(int n, int k, F&& g)
{
    std::size_t count = 8 * (static_cast<std::size_t>(k) + 4);
    double prev = 0.0;
    for (int pass = 0; pass < 12; ++pass) {
        QuadRule rule = gauss_legendre(count, 0.0, kPi);
        double sum = 0.0;
        for (std::size_t i = 0; i < count; ++i) {
            double th = rule.nodes[i];
            sum += rule.weights[i] * g(std::cos(th)) * std::pow(std::sin(th), n - 2);
        }
        if (pass > 0 && std::abs(sum - prev) <= 1e-8 * std::max(1.0, std::abs(sum)))
            return sum;
        prev = sum;
        count *= 2;
    }
    throw std::runtime_error("polar_integral: quadrature did not converge");
}

} // namespace

double sphere_area(int m)
{
    if (m < 0) throw std::domain_error("sphere_area: m >= 0");
    // |S^m| = 2 pi^{(m+1)/2} / Gamma((m+1)/2)
    return 2.0 * std::pow(kPi, 0.5 * (m + 1)) / std::tgamma(0.5 * (m + 1));
}

double gegenbauer_eval(int n, int k, double t)
{
    if (n < 2 || k < 0) throw std::domain_error("gegenbauer_eval: need n >= 2, k >= 0");
    if (std::abs(t) > 1.0 + 1e-12) throw std::domain_error("gegenbauer_eval: |t| <= 1");
    t = std::clamp(t, -1.0, 1.0);
    if (k == 0) return 1.0;
    if (n == 2) {
        // T_k: same recurrence with both coefficients pinned.
        double c0 = 1.0, c1 = t;
        for (int j = 2; j <= k; ++j) {
            double c2 = 2.0 * t * c1 - c0;
            c0 = c1;
            c1 = c2;
        }
        return c1;
    }
    const double lambda = 0.5 * (n - 2);
    double c0 = 1.0, c1 = 2.0 * lambda * t;
    for (int j = 2; j <= k; ++j) {
        double c2 = (2.0 * (j + lambda - 1.0) * t * c1 - (j + 2.0 * lambda - 2.0) * c0) / j;
        c0 = c1;
        c1 = c2;
    }
    return c1;
}

std::int64_t harmonic_dimension(int n, int k)
{
    if (n < 2 || k < 0) throw std::domain_error("harmonic_dimension: need n >= 2, k >= 0");
    if (k == 0) return 1;
    return binomial(n + k - 1, k) - binomial(n + k - 3, k - 2);
}

ZonalHarmonic::ZonalHarmonic(int n, int k) : n_(n), k_(k)
{
    if (n < 2 || k < 0) throw std::domain_error("ZonalHarmonic: need n >= 2, k >= 0");
    double norm2 = sphere_area(n - 2) *
                   polar_integral(n, k, [this](double t) {
                       double c = gegenbauer_eval(n_, k_, t);
                       return c * c;
                   });
    scale_ = 1.0 / std::sqrt(norm2);
}

double ZonalHarmonic::operator()(double t) const
{
    return scale_ * gegenbauer_eval(n_, k_, t);
}

double ZonalHarmonic::lp_norm(double p) const
{
    if (std::isinf(p)) {
        // |C_k^lambda| peaks at t = 1 (and |T_k| <= 1 = T_k(1)).
        return std::abs((*this)(1.0));
    }
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: p >= 1");
    double integral = sphere_area(n_ - 2) *
                      polar_integral(n_, k_, [this, p](double t) {
                          return std::pow(std::abs((*this)(t)), p);
                      });
    return std::pow(integral, 1.0 / p);
}

} // namespace strichartz

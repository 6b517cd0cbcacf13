#include "strichartz/norms.hpp"

#include "strichartz/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace strichartz {

namespace {

// Trapezoid weights for an arbitrary sorted grid.
std::vector<double> trapezoid_weights(const std::vector<double>& x)
{
    std::vector<double> w(x.size(), 0.0);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double h = 0.5 * (x[i + 1] - x[i]);
        w[i] += h;
        w[i + 1] += h;
    }
    return w;
}

double q_norm(const std::vector<double>& g, const std::vector<double>& t, double q)
{
    if (std::isinf(q)) {
        double m = 0.0;
        for (double v : g) m = std::max(m, v);
        return m;
    }
    std::vector<double> w = trapezoid_weights(t);
    std::vector<double> terms(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) terms[i] = w[i] * std::pow(g[i], q);
    return std::pow(pairwise_sum(terms), 1.0 / q);
}

} // namespace

double pairwise_sum(const std::vector<double>& v)
{
    // Fixed binary tree, independent of threading.
    std::vector<double> buf(v);
    std::size_t n = buf.size();
    while (n > 1) {
        std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
        if (n % 2 == 1) {
            buf[half] = buf[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return buf.empty() ? 0.0 : buf[0];
}

double radial_norm(const SpaceTimeField& u, std::size_t t_index, double p, int n)
{
    const auto& r = u.grid.r_nodes;
    const std::size_t nr = r.size();
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t j = 0; j < nr; ++j) m = std::max(m, std::abs(u.at(t_index, j)));
        return m;
    }
    if (!(p >= 1.0)) throw std::invalid_argument("radial_norm: need p >= 1");
    std::vector<double> w = trapezoid_weights(r);
    std::vector<double> terms(nr);
    for (std::size_t j = 0; j < nr; ++j)
        terms[j] = w[j] * std::pow(r[j], n - 1) * std::pow(std::abs(u.at(t_index, j)), p);
    return std::pow(pairwise_sum(terms), 1.0 / p);
}

double mixed_norm(const SpaceTimeField& u, const MixedNormSpec& spec)
{
    if (u.grid.n != spec.n) throw std::invalid_argument("mixed_norm: dimension mismatch");
    const std::size_t nt = u.grid.t_nodes.size();
    std::vector<double> g(nt);
    for (std::size_t i = 0; i < nt; ++i) g[i] = radial_norm(u, i, spec.p, spec.n);
    return q_norm(g, u.grid.t_nodes, spec.q);
}

double full_space_norm(const SpaceTimeField& radial_factor, const MixedNormSpec& spec)
{
    if (!radial_factor.harmonic_index)
        throw std::invalid_argument("full_space_norm: field carries no harmonic index");
    const int k = *radial_factor.harmonic_index;
    ZonalHarmonic y(spec.n, k);
    return mixed_norm(radial_factor, spec) * y.lp_norm(spec.p);
}

double data_norm(const RadialProfile& a, int n, int k, double s, double alpha,
                 const DispersionRelation& rel, double s1, double s2)
{
    return data_norm_at_band(a, n, k, s, alpha, rel, s1, s2, 1.0);
}

double data_norm_at_band(const RadialProfile& a, int n, int k, double s, double alpha,
                         const DispersionRelation& rel, double s1, double s2, double N)
{
    if (!(std::abs(s) < 0.5 * n)) throw std::out_of_range("data_norm: need |s| < n/2");
    if (k < 0) throw std::invalid_argument("data_norm: need k >= 0");
    const double eig = static_cast<double>(k) * (k + n - 2);
    const double angular = std::pow(1.0 + eig, 0.5 * alpha);

    std::vector<double> terms(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double rho = N * a.nodes[i];
        const double m = std::pow(rho, s) * rel.multiplier(rho, s1, s2);
        // physical measure: rho^{n-1} d rho = (N rho')^{n-1} N d rho'
        terms[i] = a.weights[i] * N * std::pow(rho, n - 1) * m * m * std::norm(a.values[i]);
    }
    return angular * std::sqrt(pairwise_sum(terms));
}

} // namespace strichartz

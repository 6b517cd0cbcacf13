#include "strichartz/grid.hpp"

#include "strichartz/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace strichartz {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double standard_bump(double rho)
{
    const double z = (4.0 * rho - 5.0) / 3.0;
    if (std::abs(z) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - z * z));
}

double unit_bump(double) { return 1.0; }

double RadialProfile::l2_norm() const
{
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i) s += weights[i] * std::norm(values[i]);
    return std::sqrt(s);
}

double RadialProfile::weighted_l2_norm(int n) const
{
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
        s += weights[i] * std::pow(nodes[i], n - 1) * std::norm(values[i]);
    return std::sqrt(s);
}

RadialProfile make_profile(const std::function<Complex(double)>& fn, std::size_t m, double lo,
                           double hi)
{
    if (!(0.5 <= lo && lo < hi && hi <= 2.0))
        throw std::invalid_argument("make_profile: need [lo, hi] inside [1/2, 2]");
    QuadRule rule = gauss_legendre(m, lo, hi);
    RadialProfile h;
    h.nodes = std::move(rule.nodes);
    h.weights = std::move(rule.weights);
    h.values.resize(m);
    for (std::size_t i = 0; i < m; ++i) h.values[i] = fn(h.nodes[i]);
    return h;
}

std::size_t profile_nodes_for(double r_max)
{
    return 32 + static_cast<std::size_t>(std::ceil(6.0 * std::max(0.0, r_max)));
}

SpaceTimeGrid SpaceTimeGrid::uniform(double t0, double t1, std::size_t nt, double r0, double r1,
                                     std::size_t nr, int n)
{
    if (nt < 1 || nr < 2) throw std::invalid_argument("SpaceTimeGrid: too few nodes");
    if (!(r1 > r0) || r0 < 0.0) throw std::invalid_argument("SpaceTimeGrid: bad r range");
    SpaceTimeGrid g;
    g.n = n;
    g.t_nodes.resize(nt);
    for (std::size_t i = 0; i < nt; ++i)
        g.t_nodes[i] = nt > 1 ? t0 + (t1 - t0) * i / (nt - 1) : t0;
    g.r_nodes.resize(nr);
    for (std::size_t j = 0; j < nr; ++j) g.r_nodes[j] = r0 + (r1 - r0) * j / (nr - 1);
    return g;
}

double SpaceTimeGrid::t_spacing() const
{
    if (t_nodes.size() < 2) return 0.0;
    return (t_nodes.back() - t_nodes.front()) / (t_nodes.size() - 1);
}

double SpaceTimeGrid::r_spacing() const
{
    if (r_nodes.size() < 2) return 0.0;
    return (r_nodes.back() - r_nodes.front()) / (r_nodes.size() - 1);
}

void SpaceTimeGrid::require_sampling(double max_abs_phase) const
{
    if (r_spacing() > kPi / 8.0 + 1e-12)
        throw std::invalid_argument("SpaceTimeGrid: r-spacing exceeds pi/8");
    if (max_abs_phase > 0.0 && t_spacing() > kPi / (4.0 * max_abs_phase) + 1e-12)
        throw std::invalid_argument("SpaceTimeGrid: t-spacing too coarse for the phase");
}

} // namespace strichartz

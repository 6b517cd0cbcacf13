#include "strichartz/dispersion.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace strichartz {

DispersionRelation DispersionRelation::power_law(double a)
{
    if (!(a > 0.0) || a == 1.0)
        throw std::invalid_argument("power_law: need a > 0 and a != 1");
    return DispersionRelation(Family::PowerLaw, a);
}
DispersionRelation DispersionRelation::klein_gordon() { return {Family::KleinGordon, 0.0}; }
DispersionRelation DispersionRelation::boussinesq() { return {Family::Boussinesq, 0.0}; }
DispersionRelation DispersionRelation::modified_boussinesq() { return {Family::ModifiedBoussinesq, 0.0}; }
DispersionRelation DispersionRelation::wave() { return {Family::Wave, 0.0}; }

DispersionRelation DispersionRelation::from_token(const std::string& token)
{
    if (token.rfind("power:", 0) == 0) {
        double a;
        try {
            a = std::stod(token.substr(6));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad family token: " + token);
        }
        return power_law(a);
    }
    if (token == "klein-gordon") return klein_gordon();
    if (token == "boussinesq") return boussinesq();
    if (token == "modified-boussinesq") return modified_boussinesq();
    if (token == "wave") return wave();
    throw std::invalid_argument("bad family token: " + token);
}

std::string DispersionRelation::token() const
{
    switch (family_) {
        case Family::PowerLaw: {
            std::ostringstream os;
            os << "power:" << a_;
            return os.str();
        }
        case Family::KleinGordon: return "klein-gordon";
        case Family::Boussinesq: return "boussinesq";
        case Family::ModifiedBoussinesq: return "modified-boussinesq";
        case Family::Wave: return "wave";
    }
    return "?";
}

double DispersionRelation::eval(double rho, int order) const
{
    if (!(rho > 0.0)) throw std::domain_error("dispersion eval: rho must be positive");
    if (order < 0 || order > 4) throw std::invalid_argument("dispersion eval: order in 0..4");

    const double r2 = rho * rho;
    switch (family_) {
        case Family::PowerLaw: {
            // d^k/drho^k rho^a = a (a-1) ... (a-k+1) rho^(a-k)
            double c = 1.0;
            for (int j = 0; j < order; ++j) c *= (a_ - j);
            return c * std::pow(rho, a_ - order);
        }
        case Family::KleinGordon: {
            const double s = std::sqrt(1.0 + r2);
            switch (order) {
                case 0: return s;
                case 1: return rho / s;
                case 2: return 1.0 / (s * s * s);
                case 3: return -3.0 * rho / std::pow(1.0 + r2, 2.5);
                case 4: return (12.0 * r2 - 3.0) / std::pow(1.0 + r2, 3.5);
            }
            break;
        }
        case Family::Boussinesq: {
            const double s = std::sqrt(1.0 + r2);
            switch (order) {
                case 0: return rho * s;
                case 1: return (1.0 + 2.0 * r2) / s;
                case 2: return rho * (3.0 + 2.0 * r2) / std::pow(1.0 + r2, 1.5);
                case 3: return 3.0 / std::pow(1.0 + r2, 2.5);
                case 4: return -15.0 * rho / std::pow(1.0 + r2, 3.5);
            }
            break;
        }
        case Family::ModifiedBoussinesq: {
            // rho / sqrt(1 + rho^2); its derivatives shift the Klein-Gordon chain.
            switch (order) {
                case 0: return rho / std::sqrt(1.0 + r2);
                case 1: return 1.0 / std::pow(1.0 + r2, 1.5);
                case 2: return -3.0 * rho / std::pow(1.0 + r2, 2.5);
                case 3: return (12.0 * r2 - 3.0) / std::pow(1.0 + r2, 3.5);
                case 4: return 15.0 * rho * (3.0 - 4.0 * r2) / std::pow(1.0 + r2, 4.5);
            }
            break;
        }
        case Family::Wave:
            if (order == 0) return rho;
            if (order == 1) return 1.0;
            return 0.0;
    }
    return 0.0;
}

double DispersionRelation::eval5(double rho) const
{
    const double r2 = rho * rho;
    switch (family_) {
        case Family::PowerLaw: {
            double c = 1.0;
            for (int j = 0; j < 5; ++j) c *= (a_ - j);
            return c * std::pow(rho, a_ - 5);
        }
        case Family::KleinGordon:
            return 15.0 * rho * (3.0 - 4.0 * r2) / std::pow(1.0 + r2, 4.5);
        case Family::Boussinesq:
            return 15.0 * (6.0 * r2 - 1.0) / std::pow(1.0 + r2, 4.5);
        case Family::ModifiedBoussinesq:
            return 45.0 * (1.0 - 12.0 * r2 + 8.0 * r2 * r2) / std::pow(1.0 + r2, 5.5);
        case Family::Wave:
            return 0.0;
    }
    return 0.0;
}

double DispersionRelation::lambda0(double N) const
{
    if (!(N > 0.0)) throw std::domain_error("lambda0: N must be positive");
    const double d1 = eval(N, 1);
    if (d1 == 0.0) throw std::domain_error("lambda0: omega'(N) = 0");
    return std::abs(N * eval(N, 2) / d1);
}

double DispersionRelation::multiplier(double rho, double s1, double s2) const
{
    if (!(rho > 0.0)) throw std::domain_error("multiplier: rho must be positive");
    const double d2 = std::abs(eval(rho, 2));
    if (d2 == 0.0 && s2 < 0.0)
        throw std::domain_error("multiplier: omega'' vanishes and s2 < 0");
    double value = std::pow(eval(rho, 1) / rho, s1);
    if (s2 != 0.0) value *= std::pow(d2, s2);
    return value;
}

RescaledProfile::RescaledProfile(DispersionRelation base, double N) : base_(base), N_(N)
{
    if (!(N > 0.0)) throw std::domain_error("RescaledProfile: N must be positive");
    norm_ = N * base_.eval(N, 1);
    if (norm_ == 0.0) throw std::domain_error("RescaledProfile: omega'(N) = 0");
    lambda0_ = base_.lambda0(N);
}

double RescaledProfile::eval(double rho, int order) const
{
    // varpi^(k)(rho) = N^k omega^(k)(N rho) / (N omega'(N))
    return std::pow(N_, order) * base_.eval(N_ * rho, order) / norm_;
}

bool ConditionReport::all_hold() const
{
    if (!condition_i || !condition_iv.holds) return false;
    for (const auto& w : condition_ii)
        if (!w.holds) return false;
    for (const auto& w : condition_iii)
        if (!w.holds) return false;
    return true;
}

std::vector<double> dyadic_grid(double lo, double hi, int points_per_octave)
{
    std::vector<double> grid;
    const double l0 = std::log2(lo), l1 = std::log2(hi);
    const int total = static_cast<int>(std::ceil((l1 - l0) * points_per_octave));
    grid.reserve(total + 1);
    for (int i = 0; i <= total; ++i)
        grid.push_back(std::exp2(l0 + (l1 - l0) * i / total));
    return grid;
}

namespace {

// Track the worst two-sided ratio against [1/tol, tol].
void update_two_sided(ConditionWitness& w, double rho, double ratio, double tol)
{
    if (!std::isfinite(ratio)) {
        w.holds = false;
        w.worst_rho = rho;
        w.worst_ratio = ratio;
        return;
    }
    double badness = std::max(ratio, ratio > 0.0 ? 1.0 / ratio : INFINITY);
    double current = std::max(w.worst_ratio, w.worst_ratio > 0.0 ? 1.0 / w.worst_ratio : INFINITY);
    if (badness > current || w.worst_rho == 0.0) {
        w.worst_rho = rho;
        w.worst_ratio = ratio;
    }
    if (badness > tol) w.holds = false;
}

// Track the worst one-sided ratio against [0, tol].
void update_one_sided(ConditionWitness& w, double rho, double ratio, double tol)
{
    if (!std::isfinite(ratio) || ratio > w.worst_ratio || w.worst_rho == 0.0) {
        w.worst_rho = rho;
        w.worst_ratio = ratio;
    }
    if (!(ratio <= tol)) w.holds = false;
}

} // namespace

ConditionReport check_conditions(const DispersionRelation& rel, const std::vector<double>& grid,
                                 double ratio_tolerance)
{
    ConditionReport rep;
    rep.tolerance = ratio_tolerance;

    int sign2 = 0;
    for (double rho : grid) {
        const double d1 = rel.eval(rho, 1);
        const double d2 = rel.eval(rho, 2);

        // (i): omega' > 0, omega'' of a single strict sign.
        if (d1 <= 0.0 || d2 == 0.0 || (sign2 != 0 && sign2 != (d2 > 0.0 ? 1 : -1))) {
            rep.condition_i = false;
            if (rep.witness_i.holds) {
                rep.witness_i.holds = false;
                rep.witness_i.worst_rho = rho;
                rep.witness_i.worst_ratio = d2;
            }
        }
        if (d2 != 0.0 && sign2 == 0) sign2 = d2 > 0.0 ? 1 : -1;

        // (ii): |omega^(k)(rho)| ~ |omega^(k)(rho')| for rho' just below 2 rho.
        const double rho2 = 2.0 * rho * (1.0 - 1e-12);
        for (int k = 1; k <= 2; ++k) {
            double v1 = std::abs(rel.eval(rho, k));
            double v2 = std::abs(rel.eval(rho2, k));
            if (v1 == 0.0 && v2 == 0.0) continue;
            update_two_sided(rep.condition_ii[k - 1], rho, v2 > 0.0 ? v1 / v2 : INFINITY,
                             ratio_tolerance);
        }

        // (iii): rho |omega^(k+1)| <~ |omega^(k)| for k = 1..4.
        for (int k = 1; k <= 4; ++k) {
            double num = rho * std::abs(k == 4 ? rel.eval5(rho) : rel.eval(rho, k + 1));
            double den = std::abs(rel.eval(rho, k));
            if (num == 0.0) continue;
            update_one_sided(rep.condition_iii[k - 1], rho, den > 0.0 ? num / den : INFINITY,
                             ratio_tolerance);
        }

        // (iv): rho |omega''| ~ |omega'|.
        double num = rho * std::abs(d2);
        double den = std::abs(d1);
        if (!(num == 0.0 && den == 0.0))
            update_two_sided(rep.condition_iv, rho, den > 0.0 ? num / den : INFINITY,
                             ratio_tolerance);
    }
    return rep;
}

ConditionReport check_conditions(const DispersionRelation& rel)
{
    return check_conditions(rel, dyadic_grid(std::exp2(-10.0), std::exp2(10.0), 64), 32.0);
}

} // namespace strichartz

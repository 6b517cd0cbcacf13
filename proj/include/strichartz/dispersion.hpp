#pragma once

#include <string>
#include <vector>

namespace strichartz {

enum class Family {
    PowerLaw,            // rho^a, a > 0, a != 1
    KleinGordon,         // sqrt(1 + rho^2)
    Boussinesq,          // rho * sqrt(1 + rho^2)
    ModifiedBoussinesq,  // rho / sqrt(1 + rho^2)
    Wave,                // rho
};

/// A radial dispersion relation omega(rho) with closed-form derivatives.
class DispersionRelation {
public:
    static DispersionRelation power_law(double a);
    static DispersionRelation klein_gordon();
    static DispersionRelation boussinesq();
    static DispersionRelation modified_boussinesq();
    static DispersionRelation wave();

    /// Parse a text token: "power:2.0", "klein-gordon", "boussinesq",
    /// "modified-boussinesq", "wave". Throws std::invalid_argument.
    static DispersionRelation from_token(const std::string& token);
    std::string token() const;

    Family family() const { return family_; }
    double power() const { return a_; }

    /// omega^(order)(rho) in closed form, order in 0..4. Throws
    /// std::domain_error for rho <= 0, std::invalid_argument for a bad order.
    double eval(double rho, int order = 0) const;

    /// |N omega''(N) / omega'(N)|; the normalized curvature of the
    /// rescaled profile. Throws std::domain_error if omega'(N) = 0.
    double lambda0(double N) const;

    /// (omega'(rho)/rho)^s1 * |omega''(rho)|^s2. Throws std::domain_error
    /// when omega''(rho) = 0 and s2 < 0.
    double multiplier(double rho, double s1, double s2) const;

private:
    DispersionRelation(Family f, double a) : family_(f), a_(a) {}

    // Fifth derivative, used only by the structural condition checks.
    double eval5(double rho) const;
    friend struct ConditionChecker;

    Family family_;
    double a_ = 0.0;
};

/// Rescaled profile of a dyadic frequency block: varpi(rho) = omega(N rho) / (N omega'(N)).
/// By construction varpi'(1) = 1 exactly.
class RescaledProfile {
public:
    RescaledProfile(DispersionRelation base, double N);

    double operator()(double rho) const { return eval(rho, 0); }
    double eval(double rho, int order) const;
    double lambda0() const { return lambda0_; }
    double scale() const { return N_; }
    const DispersionRelation& base() const { return base_; }

private:
    DispersionRelation base_;
    double N_;
    double norm_;  // N * omega'(N)
    double lambda0_;
};

/// Worst observed ratio and where it happened, for one structural condition.
struct ConditionWitness {
    bool holds = true;
    double worst_rho = 0.0;
    double worst_ratio = 1.0;  // ratio that violated (or came closest to) the bound
};

/// Report for the structural conditions (i)-(iv):
///   (i)   omega' > 0 and omega'' of one sign,
///   (ii)  |omega^(k)| comparable on (rho, 2 rho), k = 1, 2,
///   (iii) rho |omega^(k+1)| <= tol |omega^(k)|, k = 1..4,
///   (iv)  rho |omega''| ~ |omega'| two-sidedly.
struct ConditionReport {
    bool condition_i = true;
    ConditionWitness condition_ii[2];   // k = 1, 2
    ConditionWitness condition_iii[4];  // k = 1..4
    ConditionWitness condition_iv;
    ConditionWitness witness_i;
    double tolerance = 32.0;

    bool all_hold() const;
};

/// Dyadic log-spaced grid with points_per_octave points per octave of [lo, hi].
std::vector<double> dyadic_grid(double lo, double hi, int points_per_octave);

/// Check conditions (i)-(iv) on the grid; "~" and "<~" are read as
/// ratio within [1/tolerance, tolerance].
ConditionReport check_conditions(const DispersionRelation& rel, const std::vector<double>& grid,
                                 double ratio_tolerance = 32.0);
ConditionReport check_conditions(const DispersionRelation& rel);

} // namespace strichartz

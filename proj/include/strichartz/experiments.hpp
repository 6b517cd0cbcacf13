#pragma once

#include "strichartz/dispersion.hpp"
#include "strichartz/exponents.hpp"
#include "strichartz/fit.hpp"
#include "strichartz/grid.hpp"
#include "strichartz/norms.hpp"

#include <random>
#include <string>
#include <vector>

namespace strichartz {

enum class TubeCentering { GroupVelocity, PhaseVelocity, Both };

struct KnappConfig {
    int n = 2;
    DispersionRelation family = DispersionRelation::power_law(2.0);
    double rho0 = 1.25;
    LebesgueExponent p = LebesgueExponent::from_value(Rational(4));
    LebesgueExponent q = LebesgueExponent::from_value(Rational(4));
    std::vector<double> r_list = {16, 32, 64, 128, 256, 512};
    TubeCentering centering = TubeCentering::Both;

    void validate() const;
};

struct KnappRow {
    double R;
    std::string centering;
    double tube_norm;      // mixed norm restricted to the tube
    double data_norm;      // || D^{s1,s2} phi ||_{H^s}
    double ratio;
    double tube_mass_fraction;  // L^2_r mass captured by the tube (audit)
};

struct KnappResult {
    std::vector<KnappRow> rows;
    ScalingFit field_fit;   // group-velocity tube norm against R
    ScalingFit data_fit;
    ScalingFit ratio_fit;
    double predicted_field_slope;  // -n/2 + 1/q + (2n-1)/(2p)
    double predicted_ratio_slope;  // predicted_field_slope + 1/4
    double group_phase_mass_ratio; // at the largest R, when both centerings ran
};

KnappResult knapp_scaling_experiment(const KnappConfig& cfg);

struct ProbeConfig {
    int n = 2;
    double nu = 0.0;
    DispersionRelation family = DispersionRelation::power_law(2.0);
    LebesgueExponent p = LebesgueExponent::infinity();
    LebesgueExponent q = LebesgueExponent::from_value(Rational(4));
    std::vector<double> r_list = {16, 32, 64, 128, 256};
    int random_probes = 8;
    unsigned seed = 7106242u;
};

struct ProbeRow {
    double R;
    std::string probe;
    double value;  // mixed_norm(T_R^nu h) / ||h||_2
};

struct ProbeResult {
    std::vector<ProbeRow> rows;
    std::vector<ScalingFit::Sample> envelope;  // max over probes per R
    ScalingFit fit;                 // fitted only when !exponential_regime
    bool exponential_regime;        // nu >> all radii: no power law to fit
    double predicted_slope;
};

/// Operator-norm growth probe for the shell operator (Proposition-style
/// bound R^{1/q - (2n-1)/2 (1/2 - 1/p)}). Requires 2/q >= 1/2 - 1/p.
ProbeResult operator_scaling_probe(const ProbeConfig& cfg);

/// Same probe structure with the linear phase (wave flow); predicted
/// exponent 1/q + (n-1)/p - (n-1)/2.
ProbeResult wave_exponent_probe(ProbeConfig cfg);

struct HomoConfig {
    int n = 2;
    DispersionRelation family = DispersionRelation::power_law(2.0);
    LebesgueExponent p = LebesgueExponent::from_value(Rational(4));
    LebesgueExponent q = LebesgueExponent::from_value(Rational(3));
    double alpha = 0.5;
    std::vector<int> k_list = {0, 1, 2, 4};
    std::vector<double> n_list = {0.25, 1.0, 4.0};  // dyadic frequency bands
    std::vector<double> r_list = {};                // optional Knapp R sweep
};

struct HomoRow {
    std::string sweep;  // "k", "band" or "R"
    double parameter;
    double field_norm;
    double data_norm;
    double ratio;
};

struct HomoResult {
    std::vector<HomoRow> rows;
    double max_ratio;
    double alpha_threshold;  // Theorem-1.1-style threshold for (n, p, q)
    bool alpha_below_threshold;
};

/// Ratio probe for the full estimate: single-harmonic k sweep, dyadic band
/// sweep, and optionally a Knapp R sweep, all reporting
/// ||u||_{L^q L^p} / ||D^{s1,s2} phi||_{H^s_r H^alpha}. Requires (n, p, q)
/// classified extended or sharp-line.
HomoResult homo_ratio_probe(const HomoConfig& cfg);

struct AuditCheck {
    std::string name;
    double value;
    double bound;
    bool pass;
};

struct BesselAuditReport {
    std::vector<AuditCheck> checks;
    bool all_pass() const;
};

/// Remainder, decay, square-function and normalization sweeps against the
/// pinned acceptance constants. c_max caps r |J - main| (default 10).
BesselAuditReport bessel_bound_audit_suite(double c_max = 10.0);

/// Deterministic band-limited random profiles: 16 cosine modes in the
/// bump coordinate, coefficients uniform in [-1, 1] from the seed.
RadialProfile random_band_profile(std::mt19937& rng, std::size_t nodes);

} // namespace strichartz

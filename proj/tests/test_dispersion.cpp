#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strichartz/dispersion.hpp"

#include <cmath>

using namespace strichartz;

namespace {

// Independent oracle: central finite difference of order k from omega.
double fd_derivative(const DispersionRelation& rel, double rho, int k, double h = 1e-5)
{
    if (k == 0) return rel.eval(rho, 0);
    double lo = fd_derivative(rel, rho - h, k - 1, h);
    double hi = fd_derivative(rel, rho + h, k - 1, h);
    return (hi - lo) / (2.0 * h);
}

std::vector<DispersionRelation> all_families()
{
    return {DispersionRelation::power_law(0.5), DispersionRelation::power_law(2.0),
            DispersionRelation::power_law(3.0), DispersionRelation::klein_gordon(),
            DispersionRelation::boussinesq(), DispersionRelation::modified_boussinesq(),
            DispersionRelation::wave()};
}

} // namespace

TEST_CASE("closed-form derivative spot values")
{
    CHECK(DispersionRelation::power_law(2.0).eval(3.0, 1) == doctest::Approx(6.0));
    CHECK(DispersionRelation::wave().eval(7.3, 2) == 0.0);
    // omega' = rho / sqrt(1 + rho^2) -> 0 as rho -> 0
    CHECK(DispersionRelation::klein_gordon().eval(1e-12, 1) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("analytic derivatives match central differences")
{
    for (const auto& rel : all_families()) {
        for (int k = 1; k <= 3; ++k) {
            for (double rho : {0.25, 0.5, 1.0, 2.3, 4.0}) {
                double exact = rel.eval(rho, k);
                double fd = fd_derivative(rel, rho, k);
                if (std::abs(exact) < 1e-12) {
                    CHECK(std::abs(fd) < 1e-6);
                } else {
                    CHECK(fd == doctest::Approx(exact).epsilon(1e-6));
                }
            }
        }
    }
}

TEST_CASE("derivatives stay finite across the dyadic range")
{
    for (const auto& rel : all_families())
        for (double rho : dyadic_grid(std::exp2(-20), std::exp2(20), 4))
            for (int k = 0; k <= 4; ++k) CHECK(std::isfinite(rel.eval(rho, k)));
}

TEST_CASE("eval rejects bad input")
{
    auto rel = DispersionRelation::klein_gordon();
    CHECK_THROWS_AS(rel.eval(0.0, 1), std::domain_error);
    CHECK_THROWS_AS(rel.eval(-1.0, 0), std::domain_error);
    CHECK_THROWS_AS(rel.eval(1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(DispersionRelation::power_law(1.0), std::invalid_argument);
    CHECK_THROWS_AS(DispersionRelation::power_law(-2.0), std::invalid_argument);
}

TEST_CASE("lambda0 values")
{
    // power law: |a - 1| for every N
    for (double a : {0.5, 2.0, 3.0}) {
        auto rel = DispersionRelation::power_law(a);
        double lo = 1e300, hi = 0.0;
        for (double N = std::exp2(-8); N <= std::exp2(8) + 1; N *= 2.0) {
            double v = rel.lambda0(N);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        CHECK(hi - lo < 1e-12 * hi);
        CHECK(hi == doctest::Approx(std::abs(a - 1.0)).epsilon(1e-12));
    }
    CHECK(DispersionRelation::klein_gordon().lambda0(1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(DispersionRelation::wave().lambda0(3.7) == 0.0);
}

TEST_CASE("rescaled profile is normalized at rho = 1")
{
    for (const auto& rel : all_families()) {
        for (double N : {1.0 / 256, 0.25, 1.0, 8.0, 256.0}) {
            RescaledProfile varpi(rel, N);
            CHECK(varpi.eval(1.0, 1) == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(varpi.lambda0() >= 0.0);
            // varpi'' at 1 has magnitude lambda0 by construction
            CHECK(std::abs(varpi.eval(1.0, 2)) == doctest::Approx(varpi.lambda0()).epsilon(1e-12));
        }
    }
}

TEST_CASE("multiplier")
{
    auto p2 = DispersionRelation::power_law(2.0);
    CHECK(p2.multiplier(5.0, 1.0, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(p2.multiplier(0.37, 0.0, 0.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(DispersionRelation::wave().multiplier(1.0, 0.0, -0.25), std::domain_error);
    // s2 = 0 with vanishing omega'' is fine
    CHECK(DispersionRelation::wave().multiplier(2.0, 1.0, 0.0) ==
          doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("structural conditions per family")
{
    for (double a : {0.5, 2.0, 3.0}) {
        ConditionReport rep = check_conditions(DispersionRelation::power_law(a));
        CHECK(rep.condition_i);
        CHECK(rep.condition_ii[0].holds);
        CHECK(rep.condition_ii[1].holds);
        for (const auto& w : rep.condition_iii) CHECK(w.holds);
        CHECK(rep.condition_iv.holds);
        CHECK(rep.all_hold());
    }

    // Klein-Gordon: (i)-(iii) hold, the two-sided curvature bound fails at
    // large rho where rho omega''/omega' = 1/(1 + rho^2) decays.
    ConditionReport kg = check_conditions(DispersionRelation::klein_gordon());
    CHECK(kg.condition_i);
    CHECK(kg.condition_ii[0].holds);
    CHECK(kg.condition_ii[1].holds);
    for (const auto& w : kg.condition_iii) CHECK(w.holds);
    CHECK_FALSE(kg.condition_iv.holds);
    CHECK(kg.condition_iv.worst_rho > 100.0);
    CHECK(kg.condition_iv.worst_ratio < 1.0 / 32.0);

    ConditionReport wave = check_conditions(DispersionRelation::wave());
    CHECK_FALSE(wave.condition_i);
    CHECK_FALSE(wave.witness_i.holds);

    // the remaining two families satisfy (i)-(iii)
    for (auto rel : {DispersionRelation::boussinesq(), DispersionRelation::modified_boussinesq()}) {
        ConditionReport rep = check_conditions(rel);
        CHECK(rep.condition_i);
        CHECK(rep.condition_ii[0].holds);
        CHECK(rep.condition_ii[1].holds);
        for (const auto& w : rep.condition_iii) CHECK(w.holds);
    }
}

TEST_CASE("every failed condition carries a witness")
{
    ConditionReport kg = check_conditions(DispersionRelation::klein_gordon());
    REQUIRE_FALSE(kg.condition_iv.holds);
    CHECK(kg.condition_iv.worst_rho != 0.0);
    CHECK(std::isfinite(kg.condition_iv.worst_ratio));
}

TEST_CASE("family tokens round trip")
{
    for (const auto& rel : all_families()) {
        auto back = DispersionRelation::from_token(rel.token());
        CHECK(back.family() == rel.family());
        if (rel.family() == Family::PowerLaw) CHECK(back.power() == doctest::Approx(rel.power()));
    }
    CHECK_THROWS_AS(DispersionRelation::from_token("fourier"), std::invalid_argument);
    CHECK_THROWS_AS(DispersionRelation::from_token("power:x"), std::invalid_argument);
}

TEST_CASE("modified Boussinesq derivatives shift the Klein-Gordon chain")
{
    auto kg = DispersionRelation::klein_gordon();
    auto imbq = DispersionRelation::modified_boussinesq();
    for (double rho : {0.3, 1.0, 2.7})
        for (int k = 0; k <= 3; ++k)
            CHECK(imbq.eval(rho, k) == doctest::Approx(kg.eval(rho, k + 1)).epsilon(1e-13));
}

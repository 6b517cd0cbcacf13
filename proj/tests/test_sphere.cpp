#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strichartz/quadrature.hpp"
#include "strichartz/sphere.hpp"

#include <cmath>

using namespace strichartz;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("sphere areas")
{
    CHECK(sphere_area(0) == doctest::Approx(2.0));
    CHECK(sphere_area(1) == doctest::Approx(2.0 * kPi));
    CHECK(sphere_area(2) == doctest::Approx(4.0 * kPi));
    CHECK(sphere_area(3) == doctest::Approx(2.0 * kPi * kPi));
}

TEST_CASE("gegenbauer base cases")
{
    for (double t : {-1.0, -0.3, 0.0, 0.7, 1.0}) {
        CHECK(gegenbauer_eval(4, 0, t) == 1.0);
        // n = 3 is the Legendre chain: C_1^{1/2}(t) = t
        CHECK(gegenbauer_eval(3, 1, t) == doctest::Approx(t));
        // Chebyshev convention at n = 2
        CHECK(gegenbauer_eval(2, 3, t) == doctest::Approx(std::cos(3.0 * std::acos(t))));
    }
    CHECK(gegenbauer_eval(3, 2, 1.0) == doctest::Approx(1.0));
    // Legendre P_2(t) = (3t^2 - 1)/2
    CHECK(gegenbauer_eval(3, 2, 0.4) == doctest::Approx((3.0 * 0.16 - 1.0) / 2.0));
}

TEST_CASE("harmonic dimensions")
{
    CHECK(harmonic_dimension(3, 2) == 5);
    CHECK(harmonic_dimension(3, 5) == 11);  // 2k + 1 in three dimensions
    for (int k = 1; k <= 8; ++k) CHECK(harmonic_dimension(2, k) == 2);
    for (int n = 2; n <= 6; ++n) CHECK(harmonic_dimension(n, 0) == 1);
    CHECK(harmonic_dimension(4, 3) == 16);  // C(6,3) - C(4,1) = 20 - 4
}

TEST_CASE("zonal harmonics have unit L2 norm")
{
    for (int n : {2, 3, 4})
        for (int k : {0, 1, 2, 5, 8}) {
            ZonalHarmonic y(n, k);
            CHECK(y.lp_norm(2.0) == doctest::Approx(1.0).epsilon(1e-8));
        }
}

TEST_CASE("orthogonality of distinct degrees")
{
    for (int n : {2, 3, 4}) {
        for (int k = 0; k <= 8; k += 2) {
            for (int k2 = k + 1; k2 <= 8; k2 += 3) {
                ZonalHarmonic a(n, k), b(n, k2);
                // integrate a * b over the sphere via the polar angle
                QuadRule rule = gauss_legendre(256, 0.0, kPi);
                double dot = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    double th = rule.nodes[i];
                    dot += rule.weights[i] * a(std::cos(th)) * b(std::cos(th)) *
                           std::pow(std::sin(th), n - 2);
                }
                dot *= sphere_area(n - 2);
                CHECK(std::abs(dot) < 1e-8);
            }
        }
    }
}

TEST_CASE("Laplace-Beltrami eigenvalue via finite differences")
{
    // Delta_sigma on zonal functions: f'' + (n-2) cot(theta) f', eigenvalue
    // -k (k + n - 2).
    const double h = 1e-4;
    for (int n : {2, 3, 5}) {
        for (int k : {1, 2, 4}) {
            ZonalHarmonic y(n, k);
            double worst = 0.0;
            for (double th = 0.4; th <= kPi - 0.4; th += 0.1) {
                auto f = [&](double x) { return y(std::cos(x)); };
                double d1 = (f(th + h) - f(th - h)) / (2.0 * h);
                double d2 = (f(th + h) - 2.0 * f(th) + f(th - h)) / (h * h);
                double lap = d2 + (n - 2) * std::cos(th) / std::sin(th) * d1;
                double expected = -y.eigenvalue() * f(th);
                if (std::abs(expected) > 1e-3)
                    worst = std::max(worst, std::abs(lap - expected) / std::abs(expected));
            }
            CHECK(worst < 1e-4);
        }
    }
}

TEST_CASE("lp norms")
{
    // constant harmonic: |S^{n-1}|^{1/p - 1/2}
    for (int n : {2, 3, 4}) {
        ZonalHarmonic y(n, 0);
        for (double p : {1.0, 2.0, 4.0}) {
            double expected = std::pow(sphere_area(n - 1), 1.0 / p - 0.5);
            CHECK(y.lp_norm(p) == doctest::Approx(expected).epsilon(1e-8));
        }
        CHECK(y.lp_norm(INFINITY) ==
              doctest::Approx(std::pow(sphere_area(n - 1), -0.5)).epsilon(1e-10));
    }
    // normalized degree-1 harmonic in R^3 peaks at sqrt(3/(4 pi))
    ZonalHarmonic y31(3, 1);
    CHECK(y31.lp_norm(INFINITY) == doctest::Approx(std::sqrt(3.0 / (4.0 * kPi))).epsilon(1e-10));
}

TEST_CASE("sup norm grows with the degree")
{
    for (int n : {2, 3, 4}) {
        double prev = 0.0;
        for (int k = 0; k <= 16; ++k) {
            double sup = ZonalHarmonic(n, k).lp_norm(INFINITY);
            CHECK(sup >= prev * (1.0 - 1e-12));
            prev = sup;
        }
    }
}

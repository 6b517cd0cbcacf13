#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strichartz/exponents.hpp"

using namespace strichartz;

namespace {

LebesgueExponent L(long long num, long long den = 1)
{
    return LebesgueExponent::from_value(Rational(num, den));
}
const LebesgueExponent kInf = LebesgueExponent::infinity();

} // namespace

TEST_CASE("triple spot values")
{
    auto e = exponents(3, L(2), L(2));
    CHECK(e.s1 == Rational(-1, 2));
    CHECK(e.s2 == Rational(0));
    CHECK(e.s == Rational(-1));

    auto e2 = exponents(2, kInf, kInf);
    CHECK(e2.s1 == Rational(1, 4));
    CHECK(e2.s2 == Rational(-1, 4));
    CHECK(e2.s == Rational(1));
}

TEST_CASE("s1 + s2 = -1/q identically")
{
    for (int n : {2, 3, 5})
        for (auto p : {L(2), L(4), L(10, 3), kInf})
            for (auto q : {L(2), L(3), L(8, 3), kInf}) {
                auto e = exponents(n, p, q);
                CHECK(e.s1 + e.s2 == -q.inverse());
            }
}

TEST_CASE("s vanishes exactly on the classical line")
{
    // 2/q + n/p = n/2 with rational points
    for (int n : {2, 3, 4}) {
        for (auto p : {L(4), L(6), L(8), L(10)}) {
            Rational inv_q = (Rational(n, 2) - Rational(n) * p.inverse()) / 2;
            if (inv_q < 0 || inv_q > Rational(1, 2)) continue;
            auto q = LebesgueExponent::from_inverse(inv_q);
            auto e = exponents(n, p, q);
            CHECK(e.s == Rational(0));
            auto c = classify(n, p, q);
            REQUIRE(c.alpha_thm1.has_value());
            CHECK(*c.alpha_thm1 == Rational(0));
            CHECK(*c.alpha_thm2 == Rational(0));
        }
    }
}

TEST_CASE("range errors")
{
    CHECK_THROWS_AS(exponents(1, L(2), L(2)), std::out_of_range);
    CHECK_THROWS_AS(exponents(2, L(3, 2), L(2)), std::out_of_range);
    CHECK_THROWS_AS(classify(3, L(2), L(1)), std::out_of_range);
}

TEST_CASE("hand-computed classification table")
{
    struct Case {
        int n;
        LebesgueExponent p, q;
        Region region;
    };
    const std::vector<Case> cases = {
        {3, L(2), L(2), Region::NecessityViolated},        // 1/q = 1/2 > 0 = sharp value at p=2
        {2, kInf, L(2), Region::ExcludedEndpoint},         // the (2, inf, 2) exclusion
        {3, L(10, 3), L(2), Region::ExcludedEndpoint},     // sharp-line endpoint pair, n=3
        {2, L(6), L(2), Region::ExcludedEndpoint},         // same pair at n=2
        {4, L(14, 5), L(2), Region::ExcludedEndpoint},     // same pair at n=4
        {2, L(8), L(2), Region::Extended},
        {2, L(4), L(4), Region::Classical},                // boundary of the classical region
        {2, kInf, L(4), Region::Classical},
        {3, L(4), L(2), Region::Extended},
        {3, L(4), L(4), Region::Classical},
        {3, L(2), kInf, Region::Classical},                // p = 2 boundary
        {2, L(2), kInf, Region::Classical},
        {2, L(4), L(8, 3), Region::SharpLine},             // 1/q = 3/8 = (3/2)(1/4)
        {3, L(6), L(3), Region::Classical},
        {3, L(3), L(4), Region::Classical},                // lower endpoint of the hypothesis
        {3, L(3), L(12, 5), Region::SharpLine},            // upper endpoint of the hypothesis
        {3, L(3), L(3), Region::Extended},
        {2, L(10), L(10, 3), Region::Classical},
        {2, L(10), L(5, 2), Region::Classical},            // classical boundary, s = 0
        {2, L(10), L(2), Region::Extended},
        {5, L(2), L(7), Region::NecessityViolated},
        {2, L(4), L(2), Region::NecessityViolated},
    };
    for (const auto& c : cases) {
        CAPTURE(c.n);
        CAPTURE(c.p.str());
        CAPTURE(c.q.str());
        CHECK(classify(c.n, c.p, c.q).region == c.region);
    }
}

TEST_CASE("alpha thresholds, exact rationals")
{
    auto c = classify(2, L(4), L(3));
    REQUIRE(c.region == Region::Extended);
    CHECK(*c.alpha_thm1 == Rational(3, 10));  // (9/5)(1/2 + 2/3 - 1)
    CHECK(*c.alpha_thm2 == Rational(1, 4));   // (3/2)(1/6)
    CHECK(*c.alpha_wave == Rational(2, 3) - Rational(1, 4));

    auto c2 = classify(2, L(8), L(2));
    CHECK(*c2.alpha_thm1 == Rational(9, 20));
    CHECK(*c2.alpha_thm2 == Rational(3, 8));

    auto c3 = classify(3, L(3), L(12, 5));
    CHECK(*c3.alpha_thm1 == Rational(7, 15));
    CHECK(*c3.alpha_thm2 == Rational(5, 12));

    // no thresholds outside the theorem's region
    CHECK_FALSE(classify(2, L(4), L(2)).alpha_thm1.has_value());
    CHECK_FALSE(classify(2, kInf, L(2)).alpha_thm1.has_value());
}

TEST_CASE("thm2 threshold below thm1 threshold in the extended region")
{
    for (int n : {2, 3, 4, 6})
        for (auto p : {L(3), L(4), L(8), L(16), kInf})
            for (auto q : {L(2), L(5, 2), L(3), L(4)}) {
                auto c = classify(n, p, q);
                if (c.region != Region::Extended) continue;
                REQUIRE(c.alpha_thm1.has_value());
                CHECK(*c.alpha_thm2 < *c.alpha_thm1);
            }
}

TEST_CASE("classification is scale-free in the rational representation")
{
    auto a = classify(3, L(10, 3), L(2));
    auto b = classify(3, L(20, 6), L(4, 2));
    CHECK(a.region == b.region);
    CHECK(classify(2, L(8, 2), L(12, 4)).region == classify(2, L(4), L(3)).region);
}

TEST_CASE("sharp line q")
{
    CHECK(sharp_line_q(2, L(6)) == L(2));
    CHECK(sharp_line_q(3, L(2)).is_infinite());
    CHECK(sharp_line_q(3, L(10, 3)) == L(2));
    // below-range results are returned, not thrown
    auto below = sharp_line_q(3, kInf);
    CHECK(below.inverse() == Rational(5, 4));
}

TEST_CASE("exponent parsing")
{
    CHECK(LebesgueExponent::parse("inf").is_infinite());
    CHECK(LebesgueExponent::parse("10/3") == L(10, 3));
    CHECK(LebesgueExponent::parse("2.5") == L(5, 2));
    CHECK(LebesgueExponent::parse("4") == L(4));
    CHECK_THROWS_AS(LebesgueExponent::parse("abc"), std::invalid_argument);
    CHECK(L(10, 3).str() == "10/3");
    CHECK(kInf.str() == "inf");
}

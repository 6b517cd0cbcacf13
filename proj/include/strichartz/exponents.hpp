#pragma once

#include <boost/rational.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace strichartz {

using Rational = boost::rational<long long>;

/// A Lebesgue exponent in [1, infinity], stored as the exact rational 1/p
/// (so infinity is 0). Region boundaries are measure zero; everything here
/// is exact when the input is.
class LebesgueExponent {
public:
    static LebesgueExponent infinity() { return LebesgueExponent(Rational(0)); }
    static LebesgueExponent from_value(const Rational& p) { return LebesgueExponent(Rational(1) / p); }
    static LebesgueExponent from_inverse(const Rational& inv);

    /// Parse "2", "10/3", "inf". Throws std::invalid_argument.
    static LebesgueExponent parse(const std::string& text);

    const Rational& inverse() const { return inv_; }
    bool is_infinite() const { return inv_ == 0; }
    double value() const;
    std::string str() const;

    friend bool operator==(const LebesgueExponent& a, const LebesgueExponent& b)
    {
        return a.inv_ == b.inv_;
    }

private:
    explicit LebesgueExponent(Rational inv) : inv_(std::move(inv)) {}
    Rational inv_;  // 1/p
};

/// The exponent triple attached to (n, p, q):
///   s1 = (1/4 - 1/(2p)) - 1/q,  s2 = 1/(2p) - 1/4,  s = n (1/2 - 1/p) - 2/q.
struct StrichartzExponents {
    int n;
    LebesgueExponent p, q;
    Rational s1, s2, s;
};

enum class Region {
    Classical,          // 2/q + n/p <= n/2, minus the (2, inf, 2) exclusion
    Extended,           // strictly between the classical and sharp lines
    SharpLine,          // 1/q = (2n-1)/2 (1/2 - 1/p)
    NecessityViolated,  // 1/q > (2n-1)/2 (1/2 - 1/p)
    ExcludedEndpoint,   // (p, q) = (2(2n-1)/(2n-3), 2) or (n, p, q) = (2, inf, 2)
};

std::string region_name(Region r);

struct AdmissibilityClass {
    Region region;
    std::optional<Rational> alpha_thm1;  // (5n-1)/(5n-5) (n/p + 2/q - n/2)
    std::optional<Rational> alpha_thm2;  // (1/2)(2n-1)/(n-1) (same factor)
    std::optional<Rational> alpha_wave;  // 2/q - (n-1)(1/2 - 1/p)
};

/// Throws std::out_of_range unless n >= 2 and p, q in [2, inf].
StrichartzExponents exponents(int n, const LebesgueExponent& p, const LebesgueExponent& q);

AdmissibilityClass classify(int n, const LebesgueExponent& p, const LebesgueExponent& q);

/// 1/q = (2n-1)/2 (1/2 - 1/p) solved for q; infinity at p = 2. The result
/// may fall below 2 (large p); the caller decides what to do with it.
LebesgueExponent sharp_line_q(int n, const LebesgueExponent& p);

} // namespace strichartz

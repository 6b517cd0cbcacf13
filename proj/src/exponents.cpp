#include "strichartz/exponents.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace strichartz {

LebesgueExponent LebesgueExponent::from_inverse(const Rational& inv)
{
    // Values outside [0, 1] are tolerated so that sharp_line_q can hand
    // back a below-range q for the caller to flag.
    if (inv < 0) throw std::invalid_argument("negative exponent inverse");
    return LebesgueExponent(inv);
}

LebesgueExponent LebesgueExponent::parse(const std::string& text)
{
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            // Accept plain integers and short decimals like "2.5".
            auto dot = text.find('.');
            if (dot == std::string::npos) {
                long long v = std::stoll(text);
                return from_value(Rational(v));
            }
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            long long num = std::stoll(digits);
            long long den = 1;
            for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
            return from_value(Rational(num, den));
        }
        long long num = std::stoll(text.substr(0, slash));
        long long den = std::stoll(text.substr(slash + 1));
        return from_value(Rational(num, den));
    } catch (const boost::bad_rational&) {
        throw std::invalid_argument("bad exponent: " + text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad exponent: " + text);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("bad exponent: " + text);
    }
}

double LebesgueExponent::value() const
{
    if (is_infinite()) return std::numeric_limits<double>::infinity();
    return static_cast<double>(inv_.denominator()) / static_cast<double>(inv_.numerator());
}

std::string LebesgueExponent::str() const
{
    if (is_infinite()) return "inf";
    std::ostringstream os;
    Rational p = Rational(1) / inv_;
    os << p.numerator();
    if (p.denominator() != 1) os << '/' << p.denominator();
    return os.str();
}

std::string region_name(Region r)
{
    switch (r) {
        case Region::Classical: return "classical";
        case Region::Extended: return "extended";
        case Region::SharpLine: return "sharp-line";
        case Region::NecessityViolated: return "necessity-violated";
        case Region::ExcludedEndpoint: return "excluded-endpoint";
    }
    return "?";
}

namespace {

void require_range(int n, const LebesgueExponent& p, const LebesgueExponent& q)
{
    if (n < 2) throw std::out_of_range("need n >= 2");
    if (p.inverse() > Rational(1, 2) || q.inverse() > Rational(1, 2))
        throw std::out_of_range("need p, q in [2, inf]");
}

} // namespace

StrichartzExponents exponents(int n, const LebesgueExponent& p, const LebesgueExponent& q)
{
    require_range(n, p, q);
    const Rational u = p.inverse(), v = q.inverse();
    StrichartzExponents e{n, p, q, {}, {}, {}};
    e.s1 = Rational(1, 4) - u / 2 - v;
    e.s2 = u / 2 - Rational(1, 4);
    e.s = Rational(n) * (Rational(1, 2) - u) - 2 * v;
    return e;
}

AdmissibilityClass classify(int n, const LebesgueExponent& p, const LebesgueExponent& q)
{
    require_range(n, p, q);
    const Rational u = p.inverse(), v = q.inverse();
    const Rational half(1, 2);
    const Rational sharp = Rational(2 * n - 1, 2) * (half - u);
    const bool classical = 2 * v + n * u <= Rational(n, 2);

    AdmissibilityClass c{Region::Extended, {}, {}, {}};
    if ((n == 2 && u == 0 && v == half) ||
        (v == half && u == Rational(2 * n - 3, 2 * (2 * n - 1)))) {
        c.region = Region::ExcludedEndpoint;
        return c;
    }
    if (v > sharp) {
        c.region = Region::NecessityViolated;
        return c;
    }
    if (classical)
        c.region = Region::Classical;
    else if (v == sharp)
        c.region = Region::SharpLine;
    else
        c.region = Region::Extended;

    const Rational gap = n * u + 2 * v - Rational(n, 2);
    c.alpha_thm1 = Rational(5 * n - 1, 5 * n - 5) * gap;
    c.alpha_thm2 = Rational(2 * n - 1, 2 * (n - 1)) * gap;
    c.alpha_wave = 2 * v - (n - 1) * (half - u);
    return c;
}

LebesgueExponent sharp_line_q(int n, const LebesgueExponent& p)
{
    require_range(n, p, LebesgueExponent::infinity());
    const Rational inv_q = Rational(2 * n - 1, 2) * (Rational(1, 2) - p.inverse());
    return LebesgueExponent::from_inverse(inv_q);
}

} // namespace strichartz

#include "cantorcert/rational.hpp"

#include <stdexcept>

namespace cantorcert {

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Integer q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Integer rational_floor(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

namespace {
constexpr unsigned long kMaxExponent = 1u << 20;
} // namespace

Integer pow3(unsigned long e) {
    if (e > kMaxExponent) throw std::domain_error("pow3: exponent too large for exact evaluation");
    return boost::multiprecision::pow(Integer(3), static_cast<unsigned>(e));
}

Rational pow3_inv(unsigned long e) {
    return Rational(Integer(1), pow3(e));
}

Integer pow2(unsigned long e) {
    if (e > kMaxExponent) throw std::domain_error("pow2: exponent too large for exact evaluation");
    return Integer(1) << e;
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) throw std::invalid_argument("parse_rational: malformed");
        Integer d(den);
        if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rational(Integer(num), d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
    }
}

} // namespace cantorcert

#include "cantorcert/vonneumann.hpp"

#include <set>
#include <stdexcept>

namespace cantorcert::vonneumann {

Integer digit_position(const Rational& x, long long n, unsigned cap_bits) {
    if (x <= 0) throw std::domain_error("digit_position: x must be positive");
    if (Rational(n) <= x) throw std::domain_error("digit_position: requires n > x");
    const Integer n_sq = Integer(n) * n;
    if (n_sq > cap_bits)
        throw std::domain_error("digit_position: position exceeds 2^" + std::to_string(cap_bits) +
                                " cap");
    const Integer fl = rational_floor(Rational(n) * x);
    return pow2(n_sq.convert_to<unsigned long>()) - pow2(fl.convert_to<unsigned long>());
}

SigmaValue sigma_digits(const Rational& x, long long terms, unsigned cap_bits) {
    if (terms < 1) throw std::invalid_argument("sigma_digits: terms must be >= 1");
    if (x <= 0) throw std::domain_error("sigma_digits: x must be positive");
    SigmaValue out;
    out.x = x;
    out.terms_used = terms;
    // Summation starts at the first integer strictly above x.
    long long n = rational_floor(x).convert_to<long long>() + 1;
    for (long long t = 0; t < terms; ++t, ++n)
        out.digits.set_digit(digit_position(x, n, cap_bits), 2);
    if (static_cast<long long>(out.digits.entries.size()) != terms)
        throw std::logic_error("sigma_digits: digit positions collided");
    return out;
}

bool ProbeReport::all_distinct() const {
    for (const auto& p : pairs)
        if (!p.distinct) return false;
    return true;
}

ProbeReport injectivity_probe(const std::vector<Rational>& xs, long long terms,
                              unsigned cap_bits) {
    std::set<Rational> unique(xs.begin(), xs.end());
    if (unique.size() != xs.size())
        throw std::invalid_argument("injectivity_probe: inputs must be distinct");
    ProbeReport report;
    report.terms = terms;
    std::vector<SigmaValue> values;
    values.reserve(xs.size());
    for (const auto& x : xs) values.push_back(sigma_digits(x, terms, cap_bits));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            ProbePair p;
            p.first = xs[i];
            p.second = xs[j];
            p.distinct = values[i].digits.entries != values[j].digits.entries;
            report.pairs.push_back(std::move(p));
        }
    }
    return report;
}

ternary::EvenDigitRule select_irrational_cell() {
    return [](long long n) -> int {
        // digit 2 iff n is a perfect square
        long long r = 0;
        while (r * r < n) ++r;
        return (r * r == n) ? 2 : 0;
    };
}

} // namespace cantorcert::vonneumann

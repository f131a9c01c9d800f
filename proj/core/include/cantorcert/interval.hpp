#pragma once

#include "cantorcert/rational.hpp"

#include <optional>
#include <vector>

namespace cantorcert {

/// Closed interval with exact rational endpoints, lo <= hi.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default;
    RationalInterval(Rational l, Rational h);

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RationalInterval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }

    bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }
    bool operator!=(const RationalInterval& o) const { return !(*this == o); }
};

bool disjoint(const RationalInterval& a, const RationalInterval& b);
std::optional<RationalInterval> intersect(const RationalInterval& a, const RationalInterval& b);

// Exact interval arithmetic; endpoints never round.
RationalInterval iv_add(const RationalInterval& a, const RationalInterval& b);
RationalInterval iv_mul(const RationalInterval& a, const RationalInterval& b);
RationalInterval iv_scale(const RationalInterval& a, const Rational& c);

/// Cartesian product of intervals, one factor per variable.
struct Box {
    std::vector<RationalInterval> factors;

    Box() = default;
    explicit Box(std::vector<RationalInterval> f) : factors(std::move(f)) {}

    std::size_t arity() const { return factors.size(); }
    bool has_positive_volume() const;
    /// Every factor a sub-interval of the corresponding factor of `outer`.
    bool contained_in(const Box& outer) const;

    bool operator==(const Box& o) const { return factors == o.factors; }
    bool operator!=(const Box& o) const { return !(*this == o); }
};

} // namespace cantorcert

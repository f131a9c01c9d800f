#include "cantorcert/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantorcert {

RationalInterval::RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
}

bool disjoint(const RationalInterval& a, const RationalInterval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

std::optional<RationalInterval> intersect(const RationalInterval& a, const RationalInterval& b) {
    Rational lo = std::max(a.lo, b.lo);
    Rational hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return RationalInterval(lo, hi);
}

RationalInterval iv_add(const RationalInterval& a, const RationalInterval& b) {
    return RationalInterval(a.lo + b.lo, a.hi + b.hi);
}

RationalInterval iv_mul(const RationalInterval& a, const RationalInterval& b) {
    const Rational p1 = a.lo * b.lo;
    const Rational p2 = a.lo * b.hi;
    const Rational p3 = a.hi * b.lo;
    const Rational p4 = a.hi * b.hi;
    return RationalInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                            std::max(std::max(p1, p2), std::max(p3, p4)));
}

RationalInterval iv_scale(const RationalInterval& a, const Rational& c) {
    if (c >= 0) return RationalInterval(a.lo * c, a.hi * c);
    return RationalInterval(a.hi * c, a.lo * c);
}

bool Box::has_positive_volume() const {
    if (factors.empty()) return false;
    for (const auto& f : factors)
        if (f.width() <= 0) return false;
    return true;
}

bool Box::contained_in(const Box& outer) const {
    if (factors.size() != outer.factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (!outer.factors[i].contains(factors[i])) return false;
    return true;
}

} // namespace cantorcert

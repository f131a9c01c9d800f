#include "cantorcert/homeo.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantorcert::homeo {

GapFamily gaps_of(const builder::CantorApproximation& approx) {
    if (approx.depth() < 1) throw std::invalid_argument("gaps_of: approximation has no levels");
    const auto& deepest = approx.levels.back();
    GapFamily g;
    g.lo = deepest.front().lo;
    g.hi = deepest.back().hi;
    for (std::size_t j = 0; j + 1 < deepest.size(); ++j)
        g.gaps.emplace_back(deepest[j].hi, deepest[j + 1].lo);
    return g;
}

GapPairing order_isomorphism(const GapFamily& g0, const GapFamily& g1) {
    if (g0.gaps.size() != g1.gaps.size())
        throw std::invalid_argument("order_isomorphism: gap counts differ (depth mismatch)");
    GapPairing pairing;
    pairing.reserve(g0.gaps.size());
    for (int i = 0; i < static_cast<int>(g0.gaps.size()); ++i) pairing.emplace_back(i, i);
    return pairing;
}

PiecewiseLinearMap increasing_bijection(const GapPairing& pairing, const GapFamily& g0,
                                        const GapFamily& g1) {
    if (pairing.size() != g0.gaps.size() || g0.gaps.size() != g1.gaps.size())
        throw std::invalid_argument("increasing_bijection: invalid pairing");
    for (std::size_t i = 0; i < pairing.size(); ++i)
        if (pairing[i].first != static_cast<int>(i) || pairing[i].second != static_cast<int>(i))
            throw std::invalid_argument("increasing_bijection: pairing is not order-preserving");

    PiecewiseLinearMap f;
    f.breakpoints.emplace_back(g0.lo, g1.lo);
    for (std::size_t i = 0; i < g0.gaps.size(); ++i) {
        f.breakpoints.emplace_back(g0.gaps[i].first, g1.gaps[i].first);
        f.breakpoints.emplace_back(g0.gaps[i].second, g1.gaps[i].second);
    }
    f.breakpoints.emplace_back(g0.hi, g1.hi);
    if (!is_strictly_increasing(f))
        throw std::invalid_argument("increasing_bijection: gap families are not strictly ordered");
    return f;
}

Rational apply(const PiecewiseLinearMap& f, const Rational& x) {
    const auto& bp = f.breakpoints;
    if (bp.empty()) return x;
    if (x <= bp.front().first) return bp.front().second + (x - bp.front().first);
    if (x >= bp.back().first) return bp.back().second + (x - bp.back().first);
    // first breakpoint with bx >= x
    auto it = std::lower_bound(bp.begin(), bp.end(), x,
                               [](const auto& b, const Rational& v) { return b.first < v; });
    if (it->first == x) return it->second;
    const auto& right = *it;
    const auto& left = *(it - 1);
    const Rational t = (x - left.first) / (right.first - left.first);
    return left.second + t * (right.second - left.second);
}

Rational invert(const PiecewiseLinearMap& f, const Rational& y) {
    if (!is_strictly_increasing(f))
        throw std::invalid_argument("invert: map is not strictly increasing");
    const auto& bp = f.breakpoints;
    if (bp.empty()) return y;
    if (y <= bp.front().second) return bp.front().first + (y - bp.front().second);
    if (y >= bp.back().second) return bp.back().first + (y - bp.back().second);
    auto it = std::lower_bound(bp.begin(), bp.end(), y,
                               [](const auto& b, const Rational& v) { return b.second < v; });
    if (it->second == y) return it->first;
    const auto& right = *it;
    const auto& left = *(it - 1);
    const Rational t = (y - left.second) / (right.second - left.second);
    return left.first + t * (right.first - left.first);
}

bool is_strictly_increasing(const PiecewiseLinearMap& f) {
    const auto& bp = f.breakpoints;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i)
        if (!(bp[i].first < bp[i + 1].first && bp[i].second < bp[i + 1].second)) return false;
    return true;
}

bool is_increasing_algebraic(const PiecewiseLinearMap& f,
                             const std::vector<std::pair<Rational, Rational>>& samples) {
    for (const auto& [u, v] : samples)
        if ((u - v) * (apply(f, u) - apply(f, v)) < 0) return false;
    return true;
}

} // namespace cantorcert::homeo

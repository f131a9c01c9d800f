#pragma once

#include "cantorcert/builder.hpp"
#include "cantorcert/rational.hpp"

#include <utility>
#include <vector>

namespace cantorcert::homeo {

/// Ordered family of the open gaps removed from [lo, hi] to leave the
/// deepest-level intervals; gap i precedes gap i+1 (sup <= inf).
struct GapFamily {
    Rational lo;
    Rational hi;
    std::vector<std::pair<Rational, Rational>> gaps;
};

/// Open gaps between consecutive deepest-level intervals plus the bounds;
/// count is 2^depth - 1.
GapFamily gaps_of(const builder::CantorApproximation& approx);

using GapPairing = std::vector<std::pair<int, int>>;

/// The unique order-preserving bijection of two equal-length ordered gap
/// lists: i-th gap to i-th gap. Throws on size mismatch.
GapPairing order_isomorphism(const GapFamily& g0, const GapFamily& g1);

/// Piecewise-linear map determined by its breakpoints, with unit slope on
/// both tails. Strict monotonicity is a property of well-formed maps, not a
/// construction-time constraint, so decreasing witnesses are representable.
struct PiecewiseLinearMap {
    std::vector<std::pair<Rational, Rational>> breakpoints; // x strictly increasing
};

/// Strictly increasing bijection of the line mapping bounds to bounds and each
/// gap onto its paired gap, affine between breakpoints and unit slope outside.
/// Consequently it carries the deepest-level intervals of the source tree onto
/// those of the target tree.
PiecewiseLinearMap increasing_bijection(const GapPairing& pairing, const GapFamily& g0,
                                        const GapFamily& g1);

Rational apply(const PiecewiseLinearMap& f, const Rational& x);
Rational invert(const PiecewiseLinearMap& f, const Rational& y);

bool is_strictly_increasing(const PiecewiseLinearMap& f);

/// Monotonicity via the solvability identity: (u-v)*(f(u)-f(v)) >= 0 for every
/// sample pair, i.e. the product is a square of a real.
bool is_increasing_algebraic(const PiecewiseLinearMap& f,
                             const std::vector<std::pair<Rational, Rational>>& samples);

} // namespace cantorcert::homeo

#pragma once

#include "cantorcert/interval.hpp"
#include "cantorcert/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace cantorcert::ternary {

/// Sparse ternary digit sequence: position (>= 1, arbitrary precision) -> digit.
/// Unlisted positions are digit 0. `depth` bounds the represented prefix;
/// nullopt means "exact" (all positions beyond the listed ones are 0 forever).
struct TernaryDigits {
    std::map<Integer, int> entries;
    std::optional<Integer> depth;

    /// Inserts a digit, dropping explicit zeros. Throws on bad position/digit.
    void set_digit(const Integer& pos, int digit);
    int digit_at(const Integer& pos) const;

    /// True when every listed digit lies in {0,2}.
    bool is_cantor_member() const;

    bool operator==(const TernaryDigits& o) const { return entries == o.entries && depth == o.depth; }
};

/// J_{k,j}: the j-th closed interval (1-based, left to right) at stage k of
/// the middle-thirds construction. Width 3^-k.
RationalInterval standard_interval(int k, long long j);

/// Truncated digit value: sum of digit(p) * 3^-p over listed positions p <= depth.
Rational value_of(const TernaryDigits& d, const Integer& depth);

/// Result of splitting y in [0,2] into two depth-limited {0,2}-digit sequences.
/// Exact identity: value_of(a) + value_of(b) + remainder == y, with remainder
/// the minimal achievable value in [0, 2*3^-depth]. remainder == 0 exactly when
/// y*3^depth is an even integer <= 2*3^depth - 2.
struct SumDecomposition {
    TernaryDigits a;
    TernaryDigits b;
    Rational remainder;
};

/// Greedy left-to-right split: at each position picks the lexicographically
/// smallest digit pair in {0,2}^2 that leaves the residue completable.
SumDecomposition sum_decompose(const Rational& y, int depth);

/// Finite-depth interval family of the cell {x + 3*d : d in D} where D has
/// digits on even positions only. One interval per choice of the first `depth`
/// odd-position digits; each equals a standard depth-2*depth interval.
/// Requires x supported on even positions <= 2*depth with digits in {0,2}.
std::vector<RationalInterval> partition_cell(const TernaryDigits& x, int depth);

/// Rule producing the digit (0 or 2) at even position 2n, for n >= 1.
using EvenDigitRule = std::function<int(long long)>;

struct CellRationalVerdict {
    bool yes = false;            // eventually periodic witnessed within test_depth
    long long period = 0;        // smallest witnessed period (when yes)
    long long preperiod = 0;     // matching preperiod (when yes)
};

/// Scans the first test_depth digits of the rule for eventual periodicity with
/// at least one full repeated period in view. A periodic even-position stream
/// makes the whole expansion eventually periodic, so the cell contains a rational.
CellRationalVerdict cell_contains_rational(const EvenDigitRule& rule, long long test_depth);

/// Materializes the first `count` even-position digits of a rule as a sparse
/// digit sequence (positions 2, 4, ..., 2*count).
TernaryDigits materialize_even_pattern(const EvenDigitRule& rule, long long count);

} // namespace cantorcert::ternary

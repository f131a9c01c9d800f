#include "cantorcert/ternary.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantorcert::ternary {

void TernaryDigits::set_digit(const Integer& pos, int digit) {
    if (pos < 1) throw std::invalid_argument("TernaryDigits: position must be >= 1");
    if (digit < 0 || digit > 2) throw std::invalid_argument("TernaryDigits: digit must be 0, 1 or 2");
    if (digit == 0)
        entries.erase(pos);
    else
        entries[pos] = digit;
}

int TernaryDigits::digit_at(const Integer& pos) const {
    auto it = entries.find(pos);
    return it == entries.end() ? 0 : it->second;
}

bool TernaryDigits::is_cantor_member() const {
    for (const auto& [pos, d] : entries)
        if (d != 0 && d != 2) return false;
    return true;
}

RationalInterval standard_interval(int k, long long j) {
    if (k < 1 || k > 62) throw std::invalid_argument("standard_interval: stage out of range");
    const long long count = 1LL << k;
    if (j < 1 || j > count) throw std::out_of_range("standard_interval: index out of range");
    // Bits of j-1, most significant first, choose left (0) or right (2) third.
    Rational lo(0);
    for (int i = 0; i < k; ++i) {
        const long long bit = ((j - 1) >> (k - 1 - i)) & 1;
        if (bit) lo += Rational(2, pow3(static_cast<unsigned long>(i) + 1));
    }
    return RationalInterval(lo, lo + pow3_inv(static_cast<unsigned long>(k)));
}

Rational value_of(const TernaryDigits& d, const Integer& depth) {
    if (depth < 1) throw std::invalid_argument("value_of: depth must be >= 1");
    Rational sum(0);
    for (const auto& [pos, digit] : d.entries) {
        if (pos > depth) break;
        sum += Rational(digit, pow3(pos.convert_to<unsigned long>()));
    }
    return sum;
}

SumDecomposition sum_decompose(const Rational& y, int depth) {
    if (depth < 1) throw std::invalid_argument("sum_decompose: depth must be >= 1");
    if (y < 0 || y > 2) throw std::domain_error("sum_decompose: y outside [0,2]");

    const Integer three_d = pow3(static_cast<unsigned long>(depth));
    // Pair digit sums are even multiples of 3^-p, so y*3^depth must lose its odd
    // part (and any excess over 2*3^depth - 2) to a terminal remainder.
    const Rational scaled = y * three_d;
    Integer g = rational_floor(std::min(scaled, Rational(2 * three_d - 2)));
    if (g % 2 != 0) --g;
    const Rational remainder = (scaled - g) / three_d;

    SumDecomposition out;
    out.a.depth = depth;
    out.b.depth = depth;
    out.remainder = remainder;

    // Greedy on the exactly-representable part z: residue after position p must
    // stay within [0, 2*(3^-p - 3^-depth)], the reachable tail range.
    Rational residue = y - remainder;
    for (int p = 1; p <= depth; ++p) {
        const Rational unit = pow3_inv(static_cast<unsigned long>(p));
        const Rational cap = 2 * (unit - Rational(1, three_d));
        // Pairs in lexicographic order (0,0) < (0,2) < (2,0) < (2,2); (0,2) and
        // (2,0) subtract the same amount, so (2,0) is never selected.
        int chosen_a = -1, chosen_b = -1;
        for (const auto& [da, db] : {std::pair{0, 0}, std::pair{0, 2}, std::pair{2, 2}}) {
            const Rational next = residue - (da + db) * unit;
            if (next >= 0 && next <= cap) {
                chosen_a = da;
                chosen_b = db;
                residue = next;
                break;
            }
        }
        if (chosen_a < 0) throw std::logic_error("sum_decompose: no feasible digit pair");
        out.a.set_digit(p, chosen_a);
        out.b.set_digit(p, chosen_b);
    }
    if (residue != 0) throw std::logic_error("sum_decompose: nonzero residue after greedy pass");
    return out;
}

std::vector<RationalInterval> partition_cell(const TernaryDigits& x, int depth) {
    if (depth < 1) throw std::invalid_argument("partition_cell: depth must be >= 1");
    for (const auto& [pos, d] : x.entries) {
        if (d != 0 && d != 2) throw std::invalid_argument("partition_cell: digit outside {0,2}");
        if (pos % 2 != 0) throw std::invalid_argument("partition_cell: digit at odd position");
        if (pos > 2 * depth) throw std::invalid_argument("partition_cell: support beyond 2*depth");
    }

    const Rational x_val = value_of(x, Integer(2 * depth));
    // Hull over all completions beyond position 2*depth (both parities) has
    // width exactly 3^-(2*depth): each cell piece is a standard interval.
    const Rational hull_width = pow3_inv(static_cast<unsigned long>(2 * depth));

    std::vector<RationalInterval> cells;
    cells.reserve(1u << depth);
    for (unsigned long mask = 0; mask < (1ul << depth); ++mask) {
        Rational odd_val(0);
        for (int i = 0; i < depth; ++i) {
            if ((mask >> i) & 1ul)
                odd_val += Rational(2, pow3(static_cast<unsigned long>(2 * i + 1)));
        }
        const Rational lo = x_val + odd_val;
        cells.emplace_back(lo, lo + hull_width);
    }
    std::sort(cells.begin(), cells.end(),
              [](const RationalInterval& a, const RationalInterval& b) { return a.lo < b.lo; });
    return cells;
}

CellRationalVerdict cell_contains_rational(const EvenDigitRule& rule, long long test_depth) {
    if (test_depth < 2) throw std::invalid_argument("cell_contains_rational: test_depth too small");
    std::vector<int> d(static_cast<std::size_t>(test_depth) + 1, 0);
    for (long long n = 1; n <= test_depth; ++n) {
        d[static_cast<std::size_t>(n)] = rule(n);
        if (d[static_cast<std::size_t>(n)] != 0 && d[static_cast<std::size_t>(n)] != 2)
            throw std::invalid_argument("cell_contains_rational: rule produced digit outside {0,2}");
    }
    // Witness requires the whole observed tail to match one period with at
    // least one full repetition in view, and the periodic tail must cover the
    // second half of the window: without the preperiod bound, any stream whose
    // last few digits happen to repeat (e.g. a trailing run of zeros) would be
    // declared periodic.
    for (long long period = 1; 2 * period <= test_depth; ++period) {
        for (long long pre = 0; pre + 2 * period <= test_depth && 2 * pre <= test_depth; ++pre) {
            bool match = true;
            for (long long i = pre + 1; i + period <= test_depth; ++i) {
                if (d[static_cast<std::size_t>(i)] != d[static_cast<std::size_t>(i + period)]) {
                    match = false;
                    break;
                }
            }
            if (match) return CellRationalVerdict{true, period, pre};
        }
    }
    return CellRationalVerdict{};
}

TernaryDigits materialize_even_pattern(const EvenDigitRule& rule, long long count) {
    if (count < 1) throw std::invalid_argument("materialize_even_pattern: count must be >= 1");
    TernaryDigits out;
    out.depth = Integer(2 * count);
    for (long long n = 1; n <= count; ++n) out.set_digit(Integer(2 * n), rule(n));
    return out;
}

} // namespace cantorcert::ternary

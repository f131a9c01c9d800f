#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorcert/ternary.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace cantorcert;
using namespace cantorcert::ternary;

namespace {

Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

// Independent geometric-sum oracle for digit values.
Rational digit_sum_oracle(const std::vector<std::pair<long, int>>& digits) {
    Rational sum(0);
    for (const auto& [pos, d] : digits) sum += Rational(d, pow3(static_cast<unsigned long>(pos)));
    return sum;
}

} // namespace

TEST_CASE("standard intervals match the classical middle-thirds values") {
    CHECK(standard_interval(1, 1) == RationalInterval(q(0), q(1, 3)));
    CHECK(standard_interval(1, 2) == RationalInterval(q(2, 3), q(1)));
    CHECK(standard_interval(2, 1) == RationalInterval(q(0), q(1, 9)));
    CHECK(standard_interval(2, 2) == RationalInterval(q(2, 9), q(1, 3)));
    CHECK(standard_interval(2, 3) == RationalInterval(q(2, 3), q(7, 9)));
    CHECK(standard_interval(2, 4) == RationalInterval(q(8, 9), q(1)));
    CHECK_THROWS_AS(standard_interval(2, 5), std::out_of_range);
    CHECK_THROWS_AS(standard_interval(2, 0), std::out_of_range);
    CHECK_THROWS_AS(standard_interval(0, 1), std::invalid_argument);
}

TEST_CASE("standard intervals nest and stay disjoint through stage 12") {
    for (int m = 1; m < 12; ++m) {
        for (long long j = 1; j <= (1LL << m); ++j) {
            const auto parent = standard_interval(m, j);
            CHECK(parent.contains(standard_interval(m + 1, 2 * j - 1)));
            CHECK(parent.contains(standard_interval(m + 1, 2 * j)));
        }
    }
    for (int k = 1; k <= 12; ++k) {
        for (long long j = 1; j < (1LL << k); ++j) {
            CHECK(standard_interval(k, j).hi < standard_interval(k, j + 1).lo);
        }
    }
}

TEST_CASE("value_of sums listed digits up to the cutoff") {
    TernaryDigits zero;
    zero.depth = Integer(5);
    CHECK(value_of(zero, 5) == 0);

    TernaryDigits all2;
    for (int p = 1; p <= 6; ++p) all2.set_digit(p, 2);
    CHECK(value_of(all2, 2) == q(8, 9));
    CHECK(value_of(all2, 6) == digit_sum_oracle({{1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}}));

    TernaryDigits evens; // 0,2,0,2 pattern
    evens.set_digit(2, 2);
    evens.set_digit(4, 2);
    CHECK(value_of(evens, 4) == q(20, 81));
    CHECK_THROWS_AS(value_of(zero, 0), std::invalid_argument);
}

TEST_CASE("sum_decompose: zero and top-end cases") {
    const auto zero = sum_decompose(q(0), 4);
    CHECK(zero.a.entries.empty());
    CHECK(zero.b.entries.empty());
    CHECK(zero.remainder == 0);

    const auto two = sum_decompose(q(2), 4);
    for (int p = 1; p <= 4; ++p) {
        CHECK(two.a.digit_at(p) == 2);
        CHECK(two.b.digit_at(p) == 2);
    }
    CHECK(value_of(two.a, 4) == 1 - pow3_inv(4));
    CHECK(two.remainder == 2 * pow3_inv(4));
    CHECK(value_of(two.a, 4) + value_of(two.b, 4) + two.remainder == 2);

    CHECK_THROWS_AS(sum_decompose(q(-1, 2), 4), std::domain_error);
    CHECK_THROWS_AS(sum_decompose(q(5, 2), 4), std::domain_error);
}

TEST_CASE("sum_decompose y=1/2 at depth 6 matches the exhaustive pair search") {
    const int depth = 6;
    const Rational y = q(1, 2);

    // Oracle: try all 4^6 digit-pair sequences in lexicographic order; keep the
    // first one achieving the minimal nonnegative remainder.
    const std::array<std::pair<int, int>, 4> pairs = {
        std::pair{0, 0}, std::pair{0, 2}, std::pair{2, 0}, std::pair{2, 2}};
    Rational best_rem(-1);
    std::vector<int> best;
    std::vector<int> choice(depth, 0);
    for (int code = 0; code < (1 << (2 * depth)); ++code) {
        int c = code;
        Rational sum(0);
        // index 0 is the most significant pair so enumeration order is
        // lexicographic in the sequence of pairs
        for (int p = 0; p < depth; ++p) {
            choice[p] = (c >> (2 * (depth - 1 - p))) & 3;
            sum += Rational(pairs[choice[p]].first + pairs[choice[p]].second,
                            pow3(static_cast<unsigned long>(p) + 1));
        }
        const Rational rem = y - sum;
        if (rem < 0) continue;
        if (best_rem < 0 || rem < best_rem) {
            best_rem = rem;
            best = choice;
        }
    }

    const auto got = sum_decompose(y, depth);
    CHECK(got.remainder == best_rem);
    for (int p = 1; p <= depth; ++p) {
        CHECK(got.a.digit_at(p) == pairs[best[p - 1]].first);
        CHECK(got.b.digit_at(p) == pairs[best[p - 1]].second);
    }
    // 1/2 = 1/4 + 1/4: both halves are the truncated 0,2,0,2,... expansion
    for (int p = 1; p <= depth; ++p) CHECK(got.a.digit_at(p) == (p % 2 == 0 ? 2 : 0));
    CHECK(got.a.entries == got.b.entries);
}

TEST_CASE("sum_decompose recomposes exactly for every y = k/3^d, d <= 4") {
    for (int d = 1; d <= 4; ++d) {
        const Integer den = pow3(static_cast<unsigned long>(d));
        for (Integer k = 0; k <= 2 * den; ++k) {
            const Rational y(k, den);
            const auto r = sum_decompose(y, d);
            CHECK(r.a.is_cantor_member());
            CHECK(r.b.is_cantor_member());
            CHECK(value_of(r.a, d) + value_of(r.b, d) + r.remainder == y);
            const bool exact_possible = (k % 2 == 0) && (k <= 2 * den - 2);
            CHECK((r.remainder == 0) == exact_possible);
        }
    }
}

TEST_CASE("partition cell of the zero pattern at depth 1") {
    TernaryDigits x;
    x.depth = Integer(2);
    const auto cells = partition_cell(x, 1);
    REQUIRE(cells.size() == 2);
    // odd digit 0 and odd digit 2, hull width 3^-2
    CHECK(cells[0] == RationalInterval(q(0), q(1, 9)));
    CHECK(cells[1] == RationalInterval(q(2, 3), q(7, 9)));
}

TEST_CASE("distinct even patterns give disjoint cell families") {
    TernaryDigits x0;
    TernaryDigits x2;
    x2.set_digit(2, 2);
    const auto c0 = partition_cell(x0, 1);
    const auto c2 = partition_cell(x2, 1);
    for (const auto& a : c0)
        for (const auto& b : c2) CHECK(disjoint(a, b));
}

TEST_CASE("cells cover the depth-2d standard tree exactly") {
    for (int depth = 1; depth <= 3; ++depth) {
        std::set<std::pair<Rational, Rational>> expected;
        for (long long j = 1; j <= (1LL << (2 * depth)); ++j) {
            const auto iv = standard_interval(2 * depth, j);
            expected.insert({iv.lo, iv.hi});
        }
        std::set<std::pair<Rational, Rational>> got;
        for (unsigned long mask = 0; mask < (1ul << depth); ++mask) {
            TernaryDigits x;
            for (int i = 0; i < depth; ++i)
                if ((mask >> i) & 1ul) x.set_digit(2 * (i + 1), 2);
            for (const auto& iv : partition_cell(x, depth)) {
                const bool fresh = got.insert({iv.lo, iv.hi}).second;
                CHECK(fresh); // pairwise disjoint across cells
            }
        }
        CHECK(got == expected);
    }
}

TEST_CASE("partition_cell validates its pattern") {
    TernaryDigits odd;
    odd.set_digit(1, 2);
    CHECK_THROWS_AS(partition_cell(odd, 1), std::invalid_argument);
    TernaryDigits one;
    one.set_digit(2, 1);
    CHECK_THROWS_AS(partition_cell(one, 1), std::invalid_argument);
    TernaryDigits deep;
    deep.set_digit(8, 2);
    CHECK_THROWS_AS(partition_cell(deep, 1), std::invalid_argument);
}

TEST_CASE("periodicity scan on digit rules") {
    const auto constant = [](long long) { return 0; };
    const auto alternating = [](long long n) { return n % 2 == 0 ? 2 : 0; };
    const auto squares = [](long long n) {
        long long r = 0;
        while (r * r < n) ++r;
        return r * r == n ? 2 : 0;
    };

    const auto v0 = cell_contains_rational(constant, 100);
    CHECK(v0.yes);
    CHECK(v0.period == 1);
    CHECK(v0.preperiod == 0);

    CHECK(cell_contains_rational(alternating, 100).yes);
    CHECK(cell_contains_rational(alternating, 100).period == 2);

    CHECK_FALSE(cell_contains_rational(squares, 100).yes);
    CHECK_FALSE(cell_contains_rational(squares, 200).yes);

    // independent brute scan agrees on a handful of eventually periodic rules
    const auto preperiodic = [](long long n) { return n <= 3 ? 2 : (n % 3 == 0 ? 2 : 0); };
    const auto v = cell_contains_rational(preperiodic, 60);
    CHECK(v.yes);
    for (long long i = v.preperiod + 1; i + v.period <= 60; ++i)
        CHECK(preperiodic(i) == preperiodic(i + v.period));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorcert/vonneumann.hpp"

using namespace cantorcert;
using namespace cantorcert::vonneumann;

namespace {
Rational q(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }
} // namespace

TEST_CASE("digit positions from the defining exponents") {
    CHECK(digit_position(q(1, 2), 1) == 1);  // 2^1 - 2^0
    CHECK(digit_position(q(1, 2), 2) == 14); // 2^4 - 2^1
    CHECK(digit_position(q(5, 2), 3) == 384); // 2^9 - 2^7
    CHECK_THROWS_AS(digit_position(q(1, 2), 0), std::domain_error);
    CHECK_THROWS_AS(digit_position(q(5, 2), 2), std::domain_error); // n <= x
    CHECK_THROWS_AS(digit_position(q(-1, 2), 1), std::domain_error);
    CHECK_THROWS_AS(digit_position(q(1, 2), 11), std::domain_error); // beyond 2^100 cap
}

TEST_CASE("positions are positive and strictly increasing in n") {
    const std::vector<Rational> xs = {q(1, 2), q(3, 4), q(5, 2), q(7, 3), q(1, 7)};
    for (const auto& x : xs) {
        Integer prev = 0;
        for (long long n = 1; n <= 12; ++n) {
            if (Rational(n) <= x) continue;
            if (Integer(n) * n > 100) break;
            const Integer cur = digit_position(x, n);
            CHECK(cur > 0);
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("sigma digit sets match the independently computed positions") {
    const auto half = sigma_digits(q(1, 2), 2);
    REQUIRE(half.digits.entries.size() == 2);
    CHECK(half.digits.digit_at(1) == 2);
    CHECK(half.digits.digit_at(14) == 2);

    const auto shifted = sigma_digits(q(5, 2), 1);
    REQUIRE(shifted.digits.entries.size() == 1);
    CHECK(shifted.digits.digit_at(384) == 2);

    const auto single = sigma_digits(q(9, 7), 1);
    CHECK(single.digits.entries.size() == 1);
    CHECK(single.digits.entries.begin()->second == 2);
}

TEST_CASE("sigma values are set members with exact truncations") {
    const auto v = sigma_digits(q(1, 2), 3);
    CHECK(v.digits.is_cantor_member());
    // exact rational value of the cutoff at position 14
    CHECK(ternary::value_of(v.digits, 14) ==
          Rational(2, pow3(1)) + Rational(2, pow3(14)));
}

TEST_CASE("injectivity probe separates and flags") {
    const auto separated = injectivity_probe({q(1, 2), q(3, 4)}, 3);
    REQUIRE(separated.pairs.size() == 1);
    CHECK(separated.pairs[0].distinct); // positions diverge at n = 3
    CHECK(separated.all_distinct());

    const auto singleton = injectivity_probe({q(2, 3)}, 2);
    CHECK(singleton.pairs.empty());
    CHECK(singleton.all_distinct());

    // floor(1*x) = 0 for both, so the first digit positions coincide
    const auto shallow = injectivity_probe({q(1, 3), q(1, 4)}, 1);
    REQUIRE(shallow.pairs.size() == 1);
    CHECK_FALSE(shallow.pairs[0].distinct);

    CHECK_THROWS_AS(injectivity_probe({q(1, 2), q(1, 2)}, 2), std::invalid_argument);
}

TEST_CASE("the squares pattern is an aperiodic set member") {
    const auto rule = select_irrational_cell();
    const auto pattern = ternary::materialize_even_pattern(rule, 20);
    CHECK(pattern.is_cantor_member());
    std::vector<Integer> positions;
    for (const auto& [pos, d] : pattern.entries) {
        CHECK(d == 2);
        positions.push_back(pos);
    }
    CHECK(positions == std::vector<Integer>{2, 8, 18, 32});

    CHECK_FALSE(ternary::cell_contains_rational(rule, 200).yes);
}

#pragma once

#include "cantorcert/rational.hpp"
#include "cantorcert/ternary.hpp"

#include <string>
#include <vector>

namespace cantorcert::vonneumann {

/// Exponent 2^(n^2) - 2^floor(n*x) of the n-th digit of the sigma map.
/// Requires n > x, which makes the value strictly positive and strictly
/// increasing in n. Positions stay symbolic big integers; they grow like
/// 2^(n^2) and are never expanded into dense digit arrays.
Integer digit_position(const Rational& x, long long n, unsigned cap_bits = 100);

/// Sparse image of x under the sigma map: digit 2 at position
/// digit_position(x, n) for the first `terms` integers n > x.
struct SigmaValue {
    Rational x;
    long long terms_used = 0;
    ternary::TernaryDigits digits;
};

SigmaValue sigma_digits(const Rational& x, long long terms, unsigned cap_bits = 100);

struct ProbePair {
    Rational first;
    Rational second;
    bool distinct = false; // digit position sets differ within the window
};

struct ProbeReport {
    long long terms = 0;
    std::vector<ProbePair> pairs;
    bool all_distinct() const;
};

/// Pairwise comparison of digit-position sets. A collision at finite terms is
/// inconclusive and reported as indistinguishable at this depth.
ProbeReport injectivity_probe(const std::vector<Rational>& xs, long long terms,
                              unsigned cap_bits = 100);

/// The even-position pattern with digit 2 exactly at positions 2*k^2
/// (characteristic sequence of the squares). Aperiodic, so the associated
/// partition cell contains no rational.
ternary::EvenDigitRule select_irrational_cell();

} // namespace cantorcert::vonneumann

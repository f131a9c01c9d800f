#pragma once

#include "cantorcert/interval.hpp"
#include "cantorcert/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace cantorcert::polyenum {

using ExponentVec = std::vector<unsigned>;

/// Canonical term order: higher total degree first, ties broken by the
/// lexicographically larger exponent vector. Serialization follows this order.
struct CanonicalTermOrder {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const;
};

/// Multivariate polynomial with integer coefficients; no zero coefficients stored.
class IntPolynomial {
public:
    using TermMap = std::map<ExponentVec, Integer, CanonicalTermOrder>;

    explicit IntPolynomial(int n_vars = 1);
    static IntPolynomial constant(int n_vars, const Integer& c);
    static IntPolynomial variable(int n_vars, int index); // 0-based variable index

    int n_vars() const { return n_vars_; }
    const TermMap& terms() const { return terms_; }

    void set_term(const ExponentVec& exps, const Integer& coef);
    void add_term(const ExponentVec& exps, const Integer& coef);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    unsigned total_degree() const;
    Integer max_abs_coef() const;
    /// max(total degree, max |coefficient|); the enumeration block of the polynomial.
    Integer size_weight() const;
    Integer constant_term() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial scaled(const Integer& c) const;

    bool operator==(const IntPolynomial& o) const { return n_vars_ == o.n_vars_ && terms_ == o.terms_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Sound range enclosure on a box: recursive Horner per variable with exact
    /// interval coefficient propagation. Inclusion-isotone in the box.
    RationalInterval evaluate_interval(const Box& box) const;

    std::string to_string() const; // diagnostic form, e.g. "2*X1^2*X2 - 1"

private:
    int n_vars_;
    TermMap terms_;
};

/// m-th nonconstant integer polynomial in n variables (m >= 1) under the
/// documented well-order: ascending size s = max(total degree, max |coef|);
/// within a block, lexicographic on the canonical serialization with exponent
/// slots in canonical order and coefficients ordered 1, -1, 2, -2, ..., s, -s.
IntPolynomial enumerate(int n, const Integer& m);

/// Inverse of enumerate on nonconstant polynomials.
Integer index_of(const IntPolynomial& p);

/// Number of polynomials in the size-s block for arity n.
Integer block_size(int n, unsigned s);

} // namespace cantorcert::polyenum

#pragma once

#include "cantorcert/polyenum.hpp"
#include "cantorcert/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cantorcert::fields {

using polyenum::IntPolynomial;

/// Element of the rational function field Q(t_1..t_k): a pair of integer
/// polynomials, content-normalized with the denominator's leading coefficient
/// positive. Equality uses cross-multiplication, so full multivariate GCD
/// reduction is never needed.
class MultivariateRational {
public:
    explicit MultivariateRational(int n_vars = 1);
    MultivariateRational(IntPolynomial num, IntPolynomial den);
    static MultivariateRational from_rational(int n_vars, const Rational& q);
    static MultivariateRational variable(int n_vars, int index);

    int n_vars() const { return num_.n_vars(); }
    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    MultivariateRational operator+(const MultivariateRational& o) const;
    MultivariateRational operator-(const MultivariateRational& o) const;
    MultivariateRational operator*(const MultivariateRational& o) const;
    MultivariateRational operator-() const;
    MultivariateRational inverse() const;

    bool operator==(const MultivariateRational& o) const;
    bool operator!=(const MultivariateRational& o) const { return !(*this == o); }

private:
    IntPolynomial num_;
    IntPolynomial den_;
    void normalize();
};

/// a + b*theta + c*theta^2 with theta^3 = 2, over Q(t_1..t_k). The basis
/// 1, theta, theta^2 is a basis because X^3 - 2 is irreducible over the
/// function field (Eisenstein at 2).
struct ThetaElement {
    MultivariateRational a;
    MultivariateRational b;
    MultivariateRational c;

    explicit ThetaElement(int n_vars = 1);
    ThetaElement(MultivariateRational a_, MultivariateRational b_, MultivariateRational c_);
    static ThetaElement theta(int n_vars);
    static ThetaElement from_rational(int n_vars, const Rational& q);

    int n_vars() const { return a.n_vars(); }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }
    /// theta-free: lies in the plain function field.
    bool is_plain() const { return b.is_zero() && c.is_zero(); }

    ThetaElement operator+(const ThetaElement& o) const;
    ThetaElement operator-(const ThetaElement& o) const;
    ThetaElement operator*(const ThetaElement& o) const;
    ThetaElement operator-() const;
    /// Solves the 3x3 multiplication system; throws on zero.
    ThetaElement inverse() const;

    bool operator==(const ThetaElement& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const ThetaElement& o) const { return !(*this == o); }
};

/// Generator set S u U u {x*theta : x in T \ U}: plain tags on S u U,
/// theta-scaled tags on T \ U.
struct GeneratorSet {
    std::vector<std::string> s_symbols;
    std::vector<std::string> t_symbols;
    std::set<std::string> u; // subset of t_symbols kept plain

    std::set<std::string> plain_symbols() const;
    std::set<std::string> scaled_symbols() const;
    bool same_base(const GeneratorSet& o) const;
};

GeneratorSet g_map(const std::vector<std::string>& s_symbols,
                   const std::vector<std::string>& t_symbols, const std::set<std::string>& u);

/// Eisenstein at q: q divides every non-leading coefficient, q does not divide
/// the leading coefficient, q^2 does not divide the constant term.
bool eisenstein_check(const IntPolynomial& p, const Integer& q);

/// Degree bookkeeping for iterated square-root adjunction: after n adjunctions
/// every new element has degree dividing 2^n, and 3 never divides 2^n, so the
/// cube root of 2 (degree 3, Eisenstein) is never reached.
std::pair<Integer, bool> sqrt_tower_degree(unsigned adjunction_count);

/// Machine-checked witness that two generator sets over the same base generate
/// incomparable fields inside any theta-free superfield: a symbol tagged
/// differently in the two sets would force both x and x*theta into one field,
/// hence their quotient theta, contradicting Eisenstein irreducibility.
struct DistinctnessCertificate {
    std::string witness;
    bool witness_plain_in_first = false;
    ThetaElement quotient;   // (x*theta)/x computed exactly
    bool quotient_is_theta = false;
    bool eisenstein_ok = false;
    bool verified() const { return quotient_is_theta && eisenstein_ok; }
};

struct DistinctnessOutcome {
    bool equal = false;
    std::optional<DistinctnessCertificate> certificate;
};

DistinctnessOutcome distinctness_certificate(const GeneratorSet& gv, const GeneratorSet& gw);

/// Symbolic verification that xi + k1 = k2 has no solution with k1, k2 in the
/// function field generated by `gens`: the difference k2 - k1 is xi-free while
/// xi has xi-degree 1. Includes a concrete spot check.
struct TranslateReport {
    std::string identity;
    bool verified = false;
    std::vector<std::string> notes;
};

TranslateReport translate_disjoint(const std::vector<std::string>& gens, const std::string& xi);

} // namespace cantorcert::fields

#include "cantorcert/fields.hpp"

#include <algorithm>
#include <stdexcept>

namespace cantorcert::fields {

namespace {

Integer poly_content(const IntPolynomial& p) {
    Integer g = 0;
    for (const auto& [e, c] : p.terms()) {
        const Integer a = abs(c);
        g = boost::multiprecision::gcd(g, a);
    }
    return g;
}

IntPolynomial divide_exact(const IntPolynomial& p, const Integer& g) {
    IntPolynomial out(p.n_vars());
    for (const auto& [e, c] : p.terms()) out.set_term(e, c / g);
    return out;
}

Integer leading_coef(const IntPolynomial& p) {
    if (p.is_zero()) return 0;
    return p.terms().begin()->second; // canonical order puts the leading term first
}

} // namespace

MultivariateRational::MultivariateRational(int n_vars)
    : num_(n_vars), den_(IntPolynomial::constant(n_vars, 1)) {}

MultivariateRational::MultivariateRational(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.n_vars() != den_.n_vars())
        throw std::invalid_argument("MultivariateRational: arity mismatch");
    if (den_.is_zero()) throw std::invalid_argument("MultivariateRational: zero denominator");
    normalize();
}

MultivariateRational MultivariateRational::from_rational(int n_vars, const Rational& q) {
    return MultivariateRational(IntPolynomial::constant(n_vars, numerator(q)),
                                IntPolynomial::constant(n_vars, denominator(q)));
}

MultivariateRational MultivariateRational::variable(int n_vars, int index) {
    return MultivariateRational(IntPolynomial::variable(n_vars, index),
                                IntPolynomial::constant(n_vars, 1));
}

void MultivariateRational::normalize() {
    if (num_.is_zero()) {
        den_ = IntPolynomial::constant(num_.n_vars(), 1);
        return;
    }
    const Integer g = boost::multiprecision::gcd(poly_content(num_), poly_content(den_));
    if (g > 1) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    if (leading_coef(den_) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

MultivariateRational MultivariateRational::operator+(const MultivariateRational& o) const {
    return MultivariateRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

MultivariateRational MultivariateRational::operator-(const MultivariateRational& o) const {
    return MultivariateRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

MultivariateRational MultivariateRational::operator*(const MultivariateRational& o) const {
    return MultivariateRational(num_ * o.num_, den_ * o.den_);
}

MultivariateRational MultivariateRational::operator-() const {
    MultivariateRational r(*this);
    r.num_ = -r.num_;
    return r;
}

MultivariateRational MultivariateRational::inverse() const {
    if (is_zero()) throw std::domain_error("MultivariateRational: inverse of zero");
    return MultivariateRational(den_, num_);
}

bool MultivariateRational::operator==(const MultivariateRational& o) const {
    // cross-multiplication comparison avoids multivariate GCD normal forms
    return num_ * o.den_ == o.num_ * den_;
}

ThetaElement::ThetaElement(int n_vars)
    : a(MultivariateRational(n_vars)), b(MultivariateRational(n_vars)),
      c(MultivariateRational(n_vars)) {}

ThetaElement::ThetaElement(MultivariateRational a_, MultivariateRational b_,
                           MultivariateRational c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.n_vars() != b.n_vars() || b.n_vars() != c.n_vars())
        throw std::invalid_argument("ThetaElement: arity mismatch");
}

ThetaElement ThetaElement::theta(int n_vars) {
    return ThetaElement(MultivariateRational(n_vars),
                        MultivariateRational::from_rational(n_vars, 1),
                        MultivariateRational(n_vars));
}

ThetaElement ThetaElement::from_rational(int n_vars, const Rational& q) {
    return ThetaElement(MultivariateRational::from_rational(n_vars, q),
                        MultivariateRational(n_vars), MultivariateRational(n_vars));
}

ThetaElement ThetaElement::operator+(const ThetaElement& o) const {
    return ThetaElement(a + o.a, b + o.b, c + o.c);
}

ThetaElement ThetaElement::operator-(const ThetaElement& o) const {
    return ThetaElement(a - o.a, b - o.b, c - o.c);
}

ThetaElement ThetaElement::operator*(const ThetaElement& o) const {
    // (a1 + b1 t + c1 t^2)(a2 + b2 t + c2 t^2) with t^3 = 2
    const MultivariateRational two = MultivariateRational::from_rational(n_vars(), 2);
    return ThetaElement(a * o.a + two * (b * o.c + c * o.b),
                        a * o.b + b * o.a + two * (c * o.c),
                        a * o.c + b * o.b + c * o.a);
}

ThetaElement ThetaElement::operator-() const { return ThetaElement(-a, -b, -c); }

ThetaElement ThetaElement::inverse() const {
    if (is_zero()) throw std::domain_error("ThetaElement: inverse of zero");
    const MultivariateRational two = MultivariateRational::from_rational(n_vars(), 2);
    const MultivariateRational four = MultivariateRational::from_rational(n_vars(), 4);
    const MultivariateRational six = MultivariateRational::from_rational(n_vars(), 6);
    // Field norm of a + b t + c t^2; nonzero for nonzero elements because
    // X^3 - 2 is irreducible over the coefficient field.
    const MultivariateRational det =
        a * a * a + two * (b * b * b) + four * (c * c * c) - six * (a * b * c);
    if (det.is_zero()) throw std::logic_error("ThetaElement: vanishing norm on nonzero element");
    const MultivariateRational inv_det = det.inverse();
    return ThetaElement((a * a - two * (b * c)) * inv_det, (two * (c * c) - a * b) * inv_det,
                        (b * b - a * c) * inv_det);
}

std::set<std::string> GeneratorSet::plain_symbols() const {
    std::set<std::string> out(s_symbols.begin(), s_symbols.end());
    out.insert(u.begin(), u.end());
    return out;
}

std::set<std::string> GeneratorSet::scaled_symbols() const {
    std::set<std::string> out;
    for (const auto& t : t_symbols)
        if (!u.count(t)) out.insert(t);
    return out;
}

bool GeneratorSet::same_base(const GeneratorSet& o) const {
    return s_symbols == o.s_symbols && t_symbols == o.t_symbols;
}

GeneratorSet g_map(const std::vector<std::string>& s_symbols,
                   const std::vector<std::string>& t_symbols, const std::set<std::string>& u) {
    std::set<std::string> s_set(s_symbols.begin(), s_symbols.end());
    std::set<std::string> t_set(t_symbols.begin(), t_symbols.end());
    if (s_set.size() != s_symbols.size() || t_set.size() != t_symbols.size())
        throw std::invalid_argument("g_map: duplicate symbols");
    for (const auto& s : s_set)
        if (t_set.count(s)) throw std::invalid_argument("g_map: S and T overlap");
    for (const auto& x : u)
        if (!t_set.count(x)) throw std::invalid_argument("g_map: U not a subset of T");
    return GeneratorSet{s_symbols, t_symbols, u};
}

bool eisenstein_check(const IntPolynomial& p, const Integer& q) {
    if (p.n_vars() != 1) throw std::invalid_argument("eisenstein_check: polynomial not univariate");
    if (p.is_constant()) throw std::invalid_argument("eisenstein_check: constant polynomial");
    if (q < 2) throw std::invalid_argument("eisenstein_check: q not prime");
    for (Integer d = 2; d * d <= q; ++d)
        if (q % d == 0) throw std::invalid_argument("eisenstein_check: q not prime");

    const unsigned deg = p.total_degree();
    std::vector<Integer> coef(deg + 1, 0);
    for (const auto& [e, c] : p.terms()) coef[e[0]] = c;
    if (coef[deg] % q == 0) return false;
    for (unsigned i = 0; i < deg; ++i)
        if (coef[i] % q != 0) return false;
    return coef[0] % (q * q) != 0;
}

std::pair<Integer, bool> sqrt_tower_degree(unsigned adjunction_count) {
    // 2-power degrees only; 3 does not divide any 2^n, so degree-3 elements
    // (Eisenstein: X^3 - 2 at 2) stay outside.
    return {pow2(adjunction_count), false};
}

DistinctnessOutcome distinctness_certificate(const GeneratorSet& gv, const GeneratorSet& gw) {
    if (!gv.same_base(gw))
        throw std::invalid_argument("distinctness_certificate: mismatched (S, T) bases");
    if (gv.u == gw.u) return DistinctnessOutcome{true, std::nullopt};

    std::set<std::string> sym_diff;
    for (const auto& x : gv.u)
        if (!gw.u.count(x)) sym_diff.insert(x);
    for (const auto& x : gw.u)
        if (!gv.u.count(x)) sym_diff.insert(x);

    DistinctnessCertificate cert;
    cert.witness = *sym_diff.begin();
    cert.witness_plain_in_first = gv.u.count(cert.witness) > 0;

    // Index the witness in the combined symbol list to compute symbolically.
    std::vector<std::string> all = gv.s_symbols;
    all.insert(all.end(), gv.t_symbols.begin(), gv.t_symbols.end());
    const int n = static_cast<int>(all.size());
    const int idx = static_cast<int>(std::find(all.begin(), all.end(), cert.witness) - all.begin());

    // A common superfield would hold both x and x*theta; their exact quotient
    // is theta, which Eisenstein keeps out of any theta-free field.
    const MultivariateRational x = MultivariateRational::variable(n, idx);
    const ThetaElement x_plain(x, MultivariateRational(n), MultivariateRational(n));
    const ThetaElement x_scaled(MultivariateRational(n), x, MultivariateRational(n));
    cert.quotient = x_scaled * x_plain.inverse();
    cert.quotient_is_theta = (cert.quotient == ThetaElement::theta(n));

    IntPolynomial cubic(1);
    cubic.set_term({3}, 1);
    cubic.set_term({0}, -2);
    cert.eisenstein_ok = eisenstein_check(cubic, 2);

    DistinctnessOutcome out;
    out.equal = false;
    out.certificate = std::move(cert);
    return out;
}

TranslateReport translate_disjoint(const std::vector<std::string>& gens, const std::string& xi) {
    for (const auto& g : gens)
        if (g == xi) throw std::invalid_argument("translate_disjoint: xi collides with a generator");

    TranslateReport report;
    report.identity = xi + " + k1 = k2 with k1, k2 in Q(" +
                      [&] {
                          std::string s;
                          for (std::size_t i = 0; i < gens.size(); ++i)
                              s += (i ? ", " : "") + gens[i];
                          return s;
                      }() +
                      ")";
    // Elements of Q(gens) are xi-free, so k2 - k1 has xi-degree 0 while xi has
    // xi-degree 1; the equation has no solution and xi + Q(gens) misses Q(gens).
    const int n = static_cast<int>(gens.size()) + 1;
    const int xi_idx = n - 1;
    const MultivariateRational xi_elem = MultivariateRational::variable(n, xi_idx);

    MultivariateRational k1 = gens.empty() ? MultivariateRational::from_rational(n, 1)
                                           : MultivariateRational::variable(n, 0);
    MultivariateRational k2 = k1 * k1 + MultivariateRational::from_rational(n, 1);
    const MultivariateRational diff = k2 - k1;

    auto xi_degree = [xi_idx](const IntPolynomial& p) {
        unsigned d = 0;
        for (const auto& [e, c] : p.terms()) d = std::max(d, e[static_cast<std::size_t>(xi_idx)]);
        return d;
    };
    const bool diff_free = xi_degree(diff.num()) == 0 && xi_degree(diff.den()) == 0;
    const bool xi_has_degree = xi_degree(xi_elem.num()) == 1;
    const bool not_equal = (xi_elem != diff);
    report.verified = diff_free && xi_has_degree && not_equal;
    report.notes.push_back("k2 - k1 has xi-degree 0 for the sampled k1, k2");
    report.notes.push_back("xi has xi-degree 1, so xi = k2 - k1 is unsolvable");
    return report;
}

} // namespace cantorcert::fields

#include "cantorcert/polyenum.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cantorcert::polyenum {

namespace {

unsigned vec_degree(const ExponentVec& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

} // namespace

bool CanonicalTermOrder::operator()(const ExponentVec& a, const ExponentVec& b) const {
    const unsigned da = vec_degree(a);
    const unsigned db = vec_degree(b);
    if (da != db) return da > db;
    return a > b; // lexicographically larger exponent vector first
}

IntPolynomial::IntPolynomial(int n_vars) : n_vars_(n_vars) {
    if (n_vars < 1) throw std::invalid_argument("IntPolynomial: n_vars must be >= 1");
}

IntPolynomial IntPolynomial::constant(int n_vars, const Integer& c) {
    IntPolynomial p(n_vars);
    p.set_term(ExponentVec(static_cast<std::size_t>(n_vars), 0), c);
    return p;
}

IntPolynomial IntPolynomial::variable(int n_vars, int index) {
    if (index < 0 || index >= n_vars) throw std::invalid_argument("IntPolynomial: variable index");
    IntPolynomial p(n_vars);
    ExponentVec e(static_cast<std::size_t>(n_vars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.set_term(e, 1);
    return p;
}

void IntPolynomial::set_term(const ExponentVec& exps, const Integer& coef) {
    if (exps.size() != static_cast<std::size_t>(n_vars_))
        throw std::invalid_argument("IntPolynomial: exponent arity mismatch");
    if (coef == 0)
        terms_.erase(exps);
    else
        terms_[exps] = coef;
}

void IntPolynomial::add_term(const ExponentVec& exps, const Integer& coef) {
    if (exps.size() != static_cast<std::size_t>(n_vars_))
        throw std::invalid_argument("IntPolynomial: exponent arity mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (coef != 0) terms_[exps] = coef;
        return;
    }
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
}

bool IntPolynomial::is_constant() const {
    for (const auto& [e, c] : terms_)
        if (vec_degree(e) > 0) return false;
    return true;
}

unsigned IntPolynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, vec_degree(e));
    return d;
}

Integer IntPolynomial::max_abs_coef() const {
    Integer m = 0;
    for (const auto& [e, c] : terms_) {
        Integer a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

Integer IntPolynomial::size_weight() const {
    return std::max(Integer(total_degree()), max_abs_coef());
}

Integer IntPolynomial::constant_term() const {
    auto it = terms_.find(ExponentVec(static_cast<std::size_t>(n_vars_), 0));
    return it == terms_.end() ? Integer(0) : it->second;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    if (n_vars_ != o.n_vars_) throw std::invalid_argument("IntPolynomial: arity mismatch");
    IntPolynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    if (n_vars_ != o.n_vars_) throw std::invalid_argument("IntPolynomial: arity mismatch");
    IntPolynomial r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (n_vars_ != o.n_vars_) throw std::invalid_argument("IntPolynomial: arity mismatch");
    IntPolynomial r(n_vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExponentVec e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r(n_vars_);
    for (const auto& [e, c] : terms_) r.set_term(e, -c);
    return r;
}

IntPolynomial IntPolynomial::scaled(const Integer& c) const {
    IntPolynomial r(n_vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.set_term(e, k * c);
    return r;
}

Rational IntPolynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != static_cast<std::size_t>(n_vars_))
        throw std::invalid_argument("IntPolynomial::evaluate: arity mismatch");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        sum += term;
    }
    return sum;
}

namespace {

using TermList = std::vector<std::pair<ExponentVec, Integer>>;

// Horner in variable `var`, coefficients enclosed recursively over later variables.
RationalInterval enclose_terms(const TermList& terms, std::size_t var, const Box& box) {
    if (terms.empty()) return RationalInterval(Rational(0), Rational(0));
    if (var == box.arity()) {
        Integer s = 0;
        for (const auto& [e, c] : terms) s += c;
        return RationalInterval(Rational(s), Rational(s));
    }
    unsigned max_deg = 0;
    for (const auto& [e, c] : terms) max_deg = std::max(max_deg, e[var]);
    std::vector<TermList> by_degree(max_deg + 1);
    for (const auto& [e, c] : terms) by_degree[e[var]].push_back({e, c});

    RationalInterval acc(Rational(0), Rational(0));
    for (unsigned d = max_deg + 1; d-- > 0;) {
        acc = iv_mul(acc, box.factors[var]);
        if (!by_degree[d].empty()) acc = iv_add(acc, enclose_terms(by_degree[d], var + 1, box));
    }
    return acc;
}

} // namespace

RationalInterval IntPolynomial::evaluate_interval(const Box& box) const {
    if (box.arity() != static_cast<std::size_t>(n_vars_))
        throw std::invalid_argument("IntPolynomial::evaluate_interval: arity mismatch");
    TermList terms(terms_.begin(), terms_.end());
    // The Horner recursion multiplies an accumulator starting at [0,0]; the
    // degree-max coefficient enters before the first multiplication, so the
    // leading term is not smeared.
    if (terms.empty()) return RationalInterval(Rational(0), Rational(0));
    return enclose_terms(terms, 0, box);
}

std::string IntPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Integer a = abs(c);
        const bool has_vars = vec_degree(e) > 0;
        if (a != 1 || !has_vars) os << a.str();
        bool star = (a != 1);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (star || !has_vars) os << "*";
            star = true;
            os << "X" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// --- Enumeration ------------------------------------------------------------
//
// Block s holds the nonconstant polynomials with max(total degree, max |coef|)
// exactly s. Within a block, a polynomial is a canonical term list over the
// slot sequence (all exponent vectors with total degree <= s, canonical order)
// with coefficients in {1,-1,2,-2,...,s,-s}. The block order is the DFS order
// in which a prefix is emitted before any of its extensions; subtree sizes are
// counted by a small DP so both directions of the bijection jump directly.

namespace {

constexpr unsigned kMaxBlock = 64;

std::vector<ExponentVec> slot_list(int n, unsigned s) {
    std::vector<ExponentVec> slots;
    ExponentVec cur(static_cast<std::size_t>(n), 0);
    // Enumerate all vectors with total degree <= s.
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t idx, unsigned left) {
        if (idx + 1 == cur.size()) {
            for (unsigned d = 0; d <= left; ++d) {
                cur[idx] = d;
                slots.push_back(cur);
            }
            cur[idx] = 0;
            return;
        }
        for (unsigned d = 0; d <= left; ++d) {
            cur[idx] = d;
            rec(idx + 1, left - d);
        }
        cur[idx] = 0;
    };
    rec(0, s);
    std::sort(slots.begin(), slots.end(), CanonicalTermOrder{});
    return slots;
}

struct BlockDP {
    int n;
    unsigned s;
    std::vector<ExponentVec> slots;
    std::vector<unsigned> slot_deg;
    // count[si][b1][b2]: emissions in the subtree of a node whose next slot is
    // si, with b1 = "has a nonconstant term", b2 = "size s already witnessed".
    std::vector<std::array<std::array<Integer, 2>, 2>> count;

    BlockDP(int n_, unsigned s_) : n(n_), s(s_), slots(slot_list(n_, s_)) {
        slot_deg.reserve(slots.size());
        for (const auto& e : slots) slot_deg.push_back(vec_degree(e));
        const std::size_t L = slots.size();
        count.assign(L + 1, {});
        for (int b1 = 0; b1 < 2; ++b1)
            for (int b2 = 0; b2 < 2; ++b2)
                count[L][static_cast<std::size_t>(b1)][static_cast<std::size_t>(b2)] =
                    (b1 && b2) ? 1 : 0;
        for (std::size_t si = L; si-- > 0;) {
            for (int b1 = 0; b1 < 2; ++b1) {
                for (int b2 = 0; b2 < 2; ++b2) {
                    Integer total = (b1 && b2) ? 1 : 0;
                    for (std::size_t j = si; j < L; ++j) {
                        const int nb1 = b1 || (slot_deg[j] >= 1);
                        const int deg_hits = (slot_deg[j] == s);
                        // coefficients with |c| < s
                        if (s >= 2)
                            total += Integer(2 * (s - 1)) *
                                     at(j + 1, nb1, b2 || deg_hits);
                        // coefficients with |c| == s
                        total += Integer(2) * at(j + 1, nb1, 1);
                    }
                    count[si][static_cast<std::size_t>(b1)][static_cast<std::size_t>(b2)] = total;
                }
            }
        }
    }

    const Integer& at(std::size_t si, int b1, int b2) const {
        return count[si][static_cast<std::size_t>(b1)][static_cast<std::size_t>(b2)];
    }

    Integer total() const { return at(0, 0, 0); }

    // Coefficients in block order: 1, -1, 2, -2, ..., s, -s.
    Integer coef_at(unsigned rank) const { // rank 0-based
        const long long a = static_cast<long long>(rank / 2) + 1;
        return (rank % 2 == 0) ? Integer(a) : Integer(-a);
    }

    IntPolynomial navigate(Integer r) const {
        IntPolynomial p(n);
        int b1 = 0, b2 = 0;
        std::size_t si = 0;
        const std::size_t L = slots.size();
        for (;;) {
            if (b1 && b2) {
                if (r == 1) return p;
                r -= 1;
            }
            bool descended = false;
            for (std::size_t j = si; j < L && !descended; ++j) {
                const int nb1 = b1 || (slot_deg[j] >= 1);
                for (unsigned cr = 0; cr < 2 * s; ++cr) {
                    const Integer c = coef_at(cr);
                    const int nb2 = b2 || (abs(c) == s) || (slot_deg[j] == s);
                    const Integer& cnt = at(j + 1, nb1, nb2);
                    if (r > cnt) {
                        r -= cnt;
                        continue;
                    }
                    p.set_term(slots[j], c);
                    b1 = nb1;
                    b2 = nb2;
                    si = j + 1;
                    descended = true;
                    break;
                }
            }
            if (!descended) throw std::logic_error("polyenum: navigation rank out of range");
        }
    }

    Integer rank_of(const IntPolynomial& p) const {
        const std::size_t L = slots.size();
        std::map<ExponentVec, std::size_t> slot_index;
        for (std::size_t j = 0; j < L; ++j) slot_index[slots[j]] = j;

        Integer r = 0;
        int b1 = 0, b2 = 0;
        std::size_t si = 0;
        for (const auto& [e, c] : p.terms()) {
            auto it = slot_index.find(e);
            if (it == slot_index.end() || it->second < si)
                throw std::logic_error("polyenum: term outside block slots");
            const std::size_t j = it->second;
            if (b1 && b2) r += 1; // the prefix itself emits before extending
            for (std::size_t jj = si; jj < j; ++jj) {
                const int nb1 = b1 || (slot_deg[jj] >= 1);
                const int deg_hits = (slot_deg[jj] == s);
                if (s >= 2)
                    r += Integer(2 * (s - 1)) * at(jj + 1, nb1, b2 || deg_hits);
                r += Integer(2) * at(jj + 1, nb1, 1);
            }
            const int nb1 = b1 || (slot_deg[j] >= 1);
            for (unsigned cr = 0; cr < 2 * s; ++cr) {
                const Integer cc = coef_at(cr);
                if (cc == c) break;
                r += at(j + 1, nb1, b2 || (abs(cc) == s) || (slot_deg[j] == s));
            }
            b1 = nb1;
            b2 = b2 || (abs(c) == s) || (slot_deg[j] == s);
            si = j + 1;
        }
        if (!(b1 && b2)) throw std::logic_error("polyenum: polynomial invalid for its block");
        return r + 1;
    }
};

} // namespace

Integer block_size(int n, unsigned s) {
    if (n < 1 || s < 1) throw std::invalid_argument("block_size: bad arguments");
    return BlockDP(n, s).total();
}

IntPolynomial enumerate(int n, const Integer& m) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be >= 1");
    if (m < 1) throw std::invalid_argument("enumerate: m must be >= 1");
    Integer remaining = m;
    for (unsigned s = 1; s <= kMaxBlock; ++s) {
        BlockDP dp(n, s);
        const Integer total = dp.total();
        if (remaining <= total) return dp.navigate(remaining);
        remaining -= total;
    }
    throw std::domain_error("enumerate: index beyond enumeration cap");
}

Integer index_of(const IntPolynomial& p) {
    if (p.is_constant()) throw std::invalid_argument("index_of: constant polynomial");
    const Integer sw = p.size_weight();
    if (sw > kMaxBlock) throw std::domain_error("index_of: polynomial size beyond enumeration cap");
    const unsigned s = sw.convert_to<unsigned>();
    Integer idx = 0;
    for (unsigned t = 1; t < s; ++t) idx += block_size(p.n_vars(), t);
    BlockDP dp(p.n_vars(), s);
    return idx + dp.rank_of(p);
}

} // namespace cantorcert::polyenum

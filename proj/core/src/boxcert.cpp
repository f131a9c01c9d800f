#include "cantorcert/boxcert.hpp"

#include <map>
#include <stdexcept>

namespace cantorcert::boxcert {

Certificate certify_nonvanishing(const polyenum::IntPolynomial& p, const Box& box) {
    return certify_nonvanishing(p, box, Integer(0));
}

Certificate certify_nonvanishing(const polyenum::IntPolynomial& p, const Box& box,
                                 const Integer& m_index) {
    if (box.arity() != static_cast<std::size_t>(p.n_vars()))
        throw std::invalid_argument("certify_nonvanishing: arity mismatch");
    Certificate cert;
    cert.n_vars = p.n_vars();
    cert.m_index = m_index;
    cert.box = box;
    cert.enclosure = p.evaluate_interval(box);
    cert.certified = !cert.enclosure.contains_zero();
    return cert;
}

namespace {

struct BoxKey {
    std::vector<Rational> ends;
    bool operator<(const BoxKey& o) const { return ends < o.ends; }
};

BoxKey key_of(const Box& b) {
    BoxKey k;
    k.ends.reserve(b.arity() * 2);
    for (const auto& f : b.factors) {
        k.ends.push_back(f.lo);
        k.ends.push_back(f.hi);
    }
    return k;
}

// A factor is splittable when something remains to cut: without a core, any
// positive width; with a core, positive slack outside it.
bool splittable(const RationalInterval& f, const std::optional<RationalInterval>& core) {
    if (!core) return f.width() > 0;
    return f.lo < core->lo || core->hi < f.hi;
}

std::pair<Box, Box> split(const Box& b, std::size_t i, const std::optional<RationalInterval>& core) {
    Box left = b, right = b;
    const RationalInterval& f = b.factors[i];
    if (!core) {
        const Rational mid = f.midpoint();
        left.factors[i] = RationalInterval(f.lo, mid);
        right.factors[i] = RationalInterval(mid, f.hi);
    } else {
        // Core-preserving children: halve the left slack, or halve the right
        // slack; both children still contain the core.
        left.factors[i] = RationalInterval((f.lo + core->lo) / 2, f.hi);
        right.factors[i] = RationalInterval(f.lo, (core->hi + f.hi) / 2);
    }
    return {left, right};
}

struct Search {
    const polyenum::IntPolynomial& p;
    const FactorCores& cores;
    long budget;
    long explored = 0;
    std::map<BoxKey, bool> seen; // box -> certified

    Search(const polyenum::IntPolynomial& p_, const FactorCores& c, long b)
        : p(p_), cores(c), budget(b) {}

    const std::optional<RationalInterval>& core_of(std::size_t i) const {
        static const std::optional<RationalInterval> none;
        return i < cores.size() ? cores[i] : none;
    }

    // true = certified, false = not; nullopt = budget exhausted
    std::optional<bool> certified(const Box& b) {
        auto k = key_of(b);
        auto it = seen.find(k);
        if (it != seen.end()) return it->second;
        if (explored >= budget) return std::nullopt;
        ++explored;
        const bool ok = !p.evaluate_interval(b).contains_zero();
        seen.emplace(std::move(k), ok);
        return ok;
    }

    std::optional<std::size_t> widest_splittable(const Box& b) const {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < b.arity(); ++i) {
            if (!splittable(b.factors[i], core_of(i))) continue;
            if (!best || b.factors[i].width() > b.factors[*best].width()) best = i;
        }
        return best;
    }

    // Depth-limited DFS, left child first. Returns a certified box, nullopt on
    // budget exhaustion, or "not found within this depth" as an empty box flag.
    enum class Outcome { found, not_found, out_of_budget };

    Outcome dfs(const Box& b, int depth_left, Box& result) {
        auto c = certified(b);
        if (!c) return Outcome::out_of_budget;
        if (*c) {
            if (!b.has_positive_volume()) return Outcome::not_found;
            result = b;
            return Outcome::found;
        }
        if (depth_left == 0) return Outcome::not_found;
        auto i = widest_splittable(b);
        if (!i) return Outcome::not_found;
        auto [left, right] = split(b, *i, core_of(*i));
        Outcome o = dfs(left, depth_left - 1, result);
        if (o != Outcome::not_found) return o;
        return dfs(right, depth_left - 1, result);
    }
};

} // namespace

RefineResult refine_to_avoid(const polyenum::IntPolynomial& p, const Box& box, long budget,
                             const FactorCores& cores) {
    if (box.arity() != static_cast<std::size_t>(p.n_vars()))
        throw std::invalid_argument("refine_to_avoid: arity mismatch");
    if (p.is_constant())
        throw std::invalid_argument("refine_to_avoid: constant polynomial is not enumerable");
    if (!box.has_positive_volume())
        throw std::invalid_argument("refine_to_avoid: box must have positive volume");
    if (!cores.empty() && cores.size() != box.arity())
        throw std::invalid_argument("refine_to_avoid: cores arity mismatch");
    for (std::size_t i = 0; i < cores.size(); ++i)
        if (cores[i] && !box.factors[i].contains(*cores[i]))
            throw std::invalid_argument("refine_to_avoid: core outside factor");
    if (budget < 1) throw std::invalid_argument("refine_to_avoid: budget must be >= 1");

    // When every factor carries a core, each candidate box contains the core
    // product; enclosures are inclusion-isotone, so a zero-straddling enclosure
    // there rules out every candidate at once.
    if (!cores.empty()) {
        bool all_cored = true;
        Box core_box;
        for (const auto& c : cores) {
            if (!c) {
                all_cored = false;
                break;
            }
            core_box.factors.push_back(*c);
        }
        if (all_cored && p.evaluate_interval(core_box).contains_zero())
            return RefineResult{std::nullopt, 1, true};
    }

    Search search(p, cores, budget);
    for (int depth = 0;; ++depth) {
        const long before = search.explored;
        Box found;
        const auto o = search.dfs(box, depth, found);
        if (o == Search::Outcome::found) return RefineResult{found, search.explored};
        if (o == Search::Outcome::out_of_budget) return RefineResult{std::nullopt, search.explored};
        // A deepening round that reached no new box means the finite search
        // space is saturated; further rounds would only repeat it.
        if (search.explored == before) return RefineResult{std::nullopt, search.explored};
    }
}

} // namespace cantorcert::boxcert

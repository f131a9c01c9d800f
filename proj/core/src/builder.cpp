#include "cantorcert/builder.hpp"

#include "cantorcert/polyenum.hpp"

#include <algorithm>
#include <functional>

namespace cantorcert::builder {

using polyenum::IntPolynomial;

BudgetExhausted::BudgetExhausted(int n_, Integer m_, std::vector<int> phi_, bool hopeless_)
    : std::runtime_error(std::string(hopeless_ ? "condition unsatisfiable under host protection"
                                               : "budget exhausted certifying condition") +
                         " (n=" + std::to_string(n_) + ", m=" + m_.str() + ")"),
      n(n_), m(std::move(m_)), phi(std::move(phi_)), hopeless(hopeless_) {}

const char* mode_name(Mode mode) {
    switch (mode) {
        case Mode::standard_embedded: return "standard";
        case Mode::target_embedded: return "target";
        case Mode::free_form: return "free";
    }
    return "free";
}

Mode mode_from_name(const std::string& name) {
    if (name == "standard") return Mode::standard_embedded;
    if (name == "target") return Mode::target_embedded;
    if (name == "free") return Mode::free_form;
    throw std::invalid_argument("unknown mode '" + name + "'");
}

namespace {

long long level_count(int k) { return 1LL << k; }

// One avoidance condition: polynomial (n, m) on the box picked out by the
// injection phi (1-based indices) into the `level` intervals.
struct Condition {
    int level;
    Integer m;
    int n;
    std::vector<int> phi;
};

void append_injections(std::vector<Condition>& out, int level, const Integer& m, int n,
                       long long intervals) {
    std::vector<int> phi;
    std::vector<bool> used(static_cast<std::size_t>(intervals) + 1, false);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(phi.size()) == n) {
            out.push_back(Condition{level, m, n, phi});
            return;
        }
        for (long long j = 1; j <= intervals; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = true;
            phi.push_back(static_cast<int>(j));
            rec();
            phi.pop_back();
            used[static_cast<std::size_t>(j)] = false;
        }
    };
    rec();
}

// Conditions for one stage: polynomial index m = stage, every arity up to the
// cap, every injection into the stage's intervals (lex ascending).
std::vector<Condition> stage_conditions(int stage, int n_max) {
    std::vector<Condition> out;
    const long long intervals = level_count(stage);
    const int top = static_cast<int>(std::min<long long>(intervals, n_max));
    for (int n = 1; n <= top; ++n) append_injections(out, stage, Integer(stage), n, intervals);
    return out;
}

// Final-level extension: the whole enumeration prefix per arity, certified on
// the deepest intervals so that one-point-per-interval samples are covered.
std::vector<Condition> prefix_conditions(int level, int n_max, long poly_prefix) {
    std::vector<Condition> out;
    const long long intervals = level_count(level);
    const int top = static_cast<int>(std::min<long long>(intervals, n_max));
    for (long m = 1; m <= poly_prefix; ++m) {
        if (m == level) continue; // already enforced as the stage condition
        for (int n = 1; n <= top; ++n) append_injections(out, level, Integer(m), n, intervals);
    }
    return out;
}

struct PolyCache {
    std::map<std::pair<int, Integer>, IntPolynomial> cache;
    const IntPolynomial& get(int n, const Integer& m) {
        auto key = std::make_pair(n, m);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, polyenum::enumerate(n, m)).first;
        return it->second;
    }
};

Box condition_box(const CantorApproximation& a, const Condition& c) {
    Box box;
    box.factors.reserve(c.phi.size());
    for (int j : c.phi) box.factors.push_back(a.levels[static_cast<std::size_t>(c.level - 1)]
                                                      [static_cast<std::size_t>(j - 1)]);
    return box;
}

int protected_depth(const CantorApproximation& a) {
    if (a.mode == Mode::standard_embedded) return a.caps.k_max;
    if (a.mode == Mode::target_embedded)
        return std::min<int>(a.caps.k_max, static_cast<int>(a.target_levels.size()));
    return 0;
}

RationalInterval host_interval(const CantorApproximation& a, int level, long long index) {
    if (a.mode == Mode::standard_embedded) return ternary::standard_interval(level, index);
    return a.target_levels[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(index - 1)];
}

// Hereditary core of interval (level k, index j): from the midpoint of its
// leftmost deepest protected descendant host to the midpoint of the rightmost.
// Keeping the core inside the interval keeps every deeper host nonempty.
std::optional<RationalInterval> core_for(const CantorApproximation& a, int level, int index) {
    const int deep = protected_depth(a);
    if (level >= deep) return std::nullopt;
    const long long span = 1LL << (deep - level);
    const long long lo_desc = static_cast<long long>(index - 1) * span + 1;
    const long long hi_desc = static_cast<long long>(index) * span;
    return RationalInterval(host_interval(a, deep, lo_desc).midpoint(),
                            host_interval(a, deep, hi_desc).midpoint());
}

void enforce(CantorApproximation& a, const std::vector<Condition>& conditions, long& budget,
             PolyCache& polys) {
    for (const auto& c : conditions) {
        const IntPolynomial& p = polys.get(c.n, c.m);
        const Box box = condition_box(a, c);
        if (budget < 1) throw BudgetExhausted(c.n, c.m, c.phi);
        --budget;
        if (!p.evaluate_interval(box).contains_zero()) continue;

        boxcert::FactorCores cores(box.arity());
        for (std::size_t i = 0; i < box.arity(); ++i)
            cores[i] = core_for(a, c.level, c.phi[i]);
        if (budget < 1) throw BudgetExhausted(c.n, c.m, c.phi);
        const auto rr = boxcert::refine_to_avoid(p, box, budget, cores);
        budget -= rr.explored;
        if (!rr.box) throw BudgetExhausted(c.n, c.m, c.phi, rr.hopeless);
        for (std::size_t i = 0; i < box.arity(); ++i)
            a.levels[static_cast<std::size_t>(c.level - 1)]
                    [static_cast<std::size_t>(c.phi[i] - 1)] = rr.box->factors[i];
    }
}

std::vector<Condition> ledger_conditions(const CantorApproximation& a) {
    std::vector<Condition> all;
    for (int m = 1; m <= a.certified_through; ++m) {
        auto cs = stage_conditions(m, a.caps.n_max);
        all.insert(all.end(), cs.begin(), cs.end());
    }
    if (a.depth() == a.caps.k_max && a.certified_through == a.caps.k_max) {
        auto cs = prefix_conditions(a.caps.k_max, a.caps.n_max, a.caps.poly_prefix);
        all.insert(all.end(), cs.begin(), cs.end());
    }
    return all;
}

void rebuild_ledger(CantorApproximation& a, PolyCache& polys) {
    a.ledger.clear();
    for (const auto& c : ledger_conditions(a)) {
        auto cert = boxcert::certify_nonvanishing(polys.get(c.n, c.m), condition_box(a, c), c.m);
        cert.level = c.level;
        cert.phi = c.phi;
        if (!cert.certified)
            throw std::logic_error("rebuild_ledger: condition lost certification after shrinking");
        a.ledger.push_back(std::move(cert));
    }
}

std::pair<RationalInterval, RationalInterval>
place_children(const CantorApproximation& a, int parent_level, int parent_index) {
    const RationalInterval& parent =
        a.levels[static_cast<std::size_t>(parent_level - 1)][static_cast<std::size_t>(parent_index - 1)];
    const int child_level = parent_level + 1;
    const bool hosted = (a.mode == Mode::standard_embedded) ||
                        (a.mode == Mode::target_embedded &&
                         child_level <= static_cast<int>(a.target_levels.size()));
    if (hosted) {
        const auto left = intersect(host_interval(a, child_level, 2LL * parent_index - 1), parent);
        const auto right = intersect(host_interval(a, child_level, 2LL * parent_index), parent);
        if (!left || !right || left->width() <= 0 || right->width() <= 0)
            throw std::logic_error("extend_level: embedding obstruction, parent lost a child host");
        return {*left, *right};
    }
    const Rational quarter = parent.width() / 4;
    return {RationalInterval(parent.lo, parent.lo + quarter),
            RationalInterval(parent.hi - quarter, parent.hi)};
}

} // namespace

CantorApproximation standard_tree(int depth) {
    if (depth < 1) throw std::invalid_argument("standard_tree: depth must be >= 1");
    CantorApproximation a;
    a.mode = Mode::standard_embedded;
    a.caps.k_max = depth;
    for (int k = 1; k <= depth; ++k) {
        std::vector<RationalInterval> level;
        for (long long j = 1; j <= level_count(k); ++j)
            level.push_back(ternary::standard_interval(k, j));
        a.levels.push_back(std::move(level));
    }
    return a;
}

CantorApproximation new_approximation(Mode mode, const std::optional<CantorApproximation>& target,
                                      const BuilderCaps& caps) {
    if (caps.k_max < 1 || caps.n_max < 1 || caps.budget < 1 || caps.poly_prefix < 0)
        throw std::invalid_argument("new_approximation: caps must be positive");
    if ((mode == Mode::target_embedded) != target.has_value())
        throw std::invalid_argument("new_approximation: target required exactly in target mode");

    CantorApproximation a;
    a.mode = mode;
    a.caps = caps;
    if (mode == Mode::target_embedded) {
        const auto problems = check_invariants(*target);
        if (!problems.empty())
            throw std::invalid_argument("new_approximation: malformed target: " + problems.front());
        a.target_levels = target->levels;
    }

    const RationalInterval root(Rational(0), Rational(1));
    if (mode == Mode::free_form) {
        const Rational quarter = root.width() / 4;
        a.levels.push_back({RationalInterval(root.lo, root.lo + quarter),
                            RationalInterval(root.hi - quarter, root.hi)});
    } else {
        const auto left = intersect(host_interval(a, 1, 1), root);
        const auto right = intersect(host_interval(a, 1, 2), root);
        if (!left || !right || left->width() <= 0 || right->width() <= 0)
            throw std::invalid_argument("new_approximation: degenerate level-1 hosts");
        a.levels.push_back({*left, *right});
    }
    return a;
}

CantorApproximation extend_level(const CantorApproximation& input) {
    const int K = input.depth();
    if (K < 1) throw std::invalid_argument("extend_level: approximation has no levels");
    if (K >= input.caps.k_max) throw std::domain_error("extend_level: depth cap reached");

    CantorApproximation a = input; // transactional: commit by return
    long budget = a.caps.budget;
    PolyCache polys;

    // Conditions still pending on the current deepest level shrink that level
    // now, while it has no children to orphan.
    for (int m = a.certified_through + 1; m <= K; ++m)
        enforce(a, stage_conditions(m, a.caps.n_max), budget, polys);
    a.certified_through = K;

    std::vector<RationalInterval> next;
    next.reserve(static_cast<std::size_t>(level_count(K + 1)));
    for (long long j = 1; j <= level_count(K); ++j) {
        auto [left, right] = place_children(a, K, static_cast<int>(j));
        next.push_back(left);
        next.push_back(right);
    }
    a.levels.push_back(std::move(next));

    enforce(a, stage_conditions(K + 1, a.caps.n_max), budget, polys);
    if (K + 1 == a.caps.k_max && a.caps.poly_prefix > 0)
        enforce(a, prefix_conditions(K + 1, a.caps.n_max, a.caps.poly_prefix), budget, polys);
    a.certified_through = K + 1;

    rebuild_ledger(a, polys);
    return a;
}

VerifyReport verify_conditions(const CantorApproximation& a, int stage, int n_max) {
    if (stage < 1 || stage > a.depth())
        throw std::invalid_argument("verify_conditions: stage exceeds depth");
    VerifyReport report;
    PolyCache polys;
    for (int m = 1; m <= stage; ++m) {
        for (const auto& c : stage_conditions(m, n_max)) {
            const auto enclosure = polys.get(c.n, c.m).evaluate_interval(condition_box(a, c));
            ++report.checked;
            ++report.checked_by[{m, c.n}];
            if (enclosure.contains_zero())
                report.failures.push_back(ConditionFailure{c.level, c.n, c.m, c.phi, enclosure});
        }
    }
    return report;
}

std::vector<Rational> sample_points(const CantorApproximation& a, SampleRule rule) {
    if (a.depth() < 1) throw std::invalid_argument("sample_points: empty approximation");
    std::vector<Rational> pts;
    for (const auto& iv : a.levels.back())
        pts.push_back(rule == SampleRule::midpoint ? iv.midpoint() : iv.lo);
    return pts;
}

IndependenceReport independence_check(const std::vector<Rational>& points, int n_max,
                                      const Integer& m_max) {
    std::vector<Rational> pts = points;
    std::sort(pts.begin(), pts.end());
    if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
        throw std::invalid_argument("independence_check: points must be distinct");

    IndependenceReport report;
    for (int n = 1; n <= n_max && n <= static_cast<int>(pts.size()); ++n) {
        std::vector<IntPolynomial> polys;
        for (Integer m = 1; m <= m_max; ++m) polys.push_back(polyenum::enumerate(n, m));

        // Ascending combinations of n distinct points. Variable-permuted
        // annihilations are covered by the enumeration itself.
        std::vector<std::size_t> combo(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = i;
        for (;;) {
            std::vector<Rational> tuple;
            tuple.reserve(combo.size());
            for (auto i : combo) tuple.push_back(pts[i]);
            for (Integer m = 1; m <= m_max; ++m) {
                ++report.evaluations;
                if (polys[static_cast<std::size_t>(m.convert_to<long>() - 1)].evaluate(tuple) == 0)
                    report.zeros.push_back(Annihilation{n, m, tuple});
            }
            // next combination
            int i = n - 1;
            while (i >= 0 &&
                   combo[static_cast<std::size_t>(i)] == pts.size() - static_cast<std::size_t>(n - i))
                --i;
            if (i < 0) break;
            ++combo[static_cast<std::size_t>(i)];
            for (int k = i + 1; k < n; ++k)
                combo[static_cast<std::size_t>(k)] = combo[static_cast<std::size_t>(k - 1)] + 1;
        }
    }
    return report;
}

std::vector<std::string> check_invariants(const CantorApproximation& a) {
    std::vector<std::string> problems;
    auto complain = [&](const std::string& s) { problems.push_back(s); };

    for (int k = 1; k <= a.depth(); ++k) {
        const auto& level = a.levels[static_cast<std::size_t>(k - 1)];
        if (static_cast<long long>(level.size()) != level_count(k))
            complain("level " + std::to_string(k) + ": wrong interval count");
        for (std::size_t j = 0; j < level.size(); ++j) {
            if (level[j].width() <= 0)
                complain("level " + std::to_string(k) + ": degenerate interval " + std::to_string(j + 1));
            if (j + 1 < level.size() && !(level[j].hi < level[j + 1].lo))
                complain("level " + std::to_string(k) + ": intervals " + std::to_string(j + 1) +
                         "," + std::to_string(j + 2) + " not increasing/disjoint");
        }
        if (k >= 2) {
            const auto& parents = a.levels[static_cast<std::size_t>(k - 2)];
            for (std::size_t j = 0; j < parents.size() && 2 * j + 1 < level.size(); ++j) {
                if (!parents[j].contains(level[2 * j]) || !parents[j].contains(level[2 * j + 1]))
                    complain("level " + std::to_string(k) + ": children escape parent " +
                             std::to_string(j + 1));
            }
            Rational prev_max(0), cur_max(0);
            for (const auto& iv : parents) prev_max = std::max(prev_max, iv.width());
            for (const auto& iv : level) cur_max = std::max(cur_max, iv.width());
            if (!(cur_max < prev_max))
                complain("level " + std::to_string(k) + ": max width did not strictly decrease");
        }
        if (a.mode == Mode::standard_embedded) {
            for (std::size_t j = 0; j < level.size(); ++j) {
                const auto host = ternary::standard_interval(k, static_cast<long long>(j + 1));
                if (!host.contains(level[j]))
                    complain("level " + std::to_string(k) + ": interval " + std::to_string(j + 1) +
                             " escapes its middle-thirds host");
            }
        }
        if (a.mode == Mode::target_embedded &&
            k <= static_cast<int>(a.target_levels.size())) {
            const auto& hosts = a.target_levels[static_cast<std::size_t>(k - 1)];
            for (std::size_t j = 0; j < level.size() && j < hosts.size(); ++j)
                if (!hosts[j].contains(level[j]))
                    complain("level " + std::to_string(k) + ": interval " + std::to_string(j + 1) +
                             " escapes its target host");
        }
    }
    for (std::size_t i = 0; i < a.ledger.size(); ++i)
        if (!a.ledger[i].certified)
            complain("ledger entry " + std::to_string(i) + " is not certified");
    return problems;
}

} // namespace cantorcert::builder

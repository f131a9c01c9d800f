#include "cantorcert/closure.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cantorcert::closure {

ChoiceRule least_element_rule() {
    return ChoiceRule{[](const ElementSet& s) -> ElementId {
        if (s.empty()) throw std::invalid_argument("choice rule applied to empty set");
        return *s.begin();
    }};
}

ClosureSystem make_span_gf2_system(int dim) {
    if (dim < 1 || dim > 20) throw std::invalid_argument("make_span_gf2_system: dim out of range");
    ClosureSystem sys;
    sys.name = "span-gf2";
    const std::uint32_t count = (1u << dim) - 1;
    sys.universe.reserve(count);
    for (std::uint32_t v = 1; v <= count; ++v) sys.universe.push_back(v);
    sys.close = [](const ElementSet& x) -> ElementSet {
        // Gaussian elimination over bitmask vectors, then enumerate the span.
        std::vector<std::uint32_t> basis;
        for (ElementId v : x) {
            std::uint32_t w = v;
            for (std::uint32_t b : basis) {
                // reduce by the basis vector with the same leading bit
                if ((w ^ b) < w) w ^= b;
            }
            if (w != 0) {
                basis.push_back(w);
                std::sort(basis.rbegin(), basis.rend());
            }
        }
        ElementSet out;
        const std::size_t n = basis.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::uint32_t v = 0;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1u) v ^= basis[i];
            if (v != 0) out.insert(v);
        }
        return out;
    };
    return sys;
}

ClosureSystem make_identity_system(std::vector<ElementId> universe) {
    ClosureSystem sys;
    sys.name = "identity";
    sys.universe = std::move(universe);
    sys.close = [](const ElementSet& x) { return x; };
    return sys;
}

namespace {

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
    ElementSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

ElementSet set_minus(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    for (ElementId v : a)
        if (!b.count(v)) out.insert(v);
    return out;
}

} // namespace

GreedyOutcome greedy_pair_build(const ClosureSystem& sys, const TargetFamily& fam,
                                const ChoiceRule& rho) {
    GreedyOutcome out;
    for (std::size_t xi = 0; xi < fam.members.size(); ++xi) {
        const ElementSet& member = fam.members[xi];
        if (member.empty()) throw std::invalid_argument("greedy_pair_build: empty family member");

        const ElementSet chosen = set_union(out.a, out.b);
        ElementSet pool_x = set_minus(member, sys.close(chosen));
        if (pool_x.empty()) {
            out.failed_index = static_cast<int>(xi);
            out.failed_step = 'x';
            return out;
        }
        const ElementId x = rho.pick(pool_x);
        out.a.insert(x);

        ElementSet with_x = set_union(out.a, out.b);
        ElementSet pool_y = set_minus(member, sys.close(with_x));
        if (pool_y.empty()) {
            out.failed_index = static_cast<int>(xi);
            out.failed_step = 'y';
            return out;
        }
        out.b.insert(rho.pick(pool_y));
    }
    out.ok = true;
    return out;
}

AuditReport audit_closure(const ClosureSystem& sys, int sample_count, std::uint64_t seed) {
    AuditReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int i = 0; i < sample_count; ++i) {
        ++report.samples;
        ElementSet x;
        for (ElementId v : sys.universe)
            if (coin(rng) == 0) x.insert(v); // sparse-ish subsets
        const ElementSet cx = sys.close(x);

        for (ElementId v : x) {
            if (!cx.count(v)) {
                report.violations.push_back("extensivity: sample " + std::to_string(i));
                break;
            }
        }
        // monotone: compare with a sampled superset
        ElementSet y = x;
        for (ElementId v : sys.universe)
            if (coin(rng) == 0) y.insert(v);
        const ElementSet cy = sys.close(y);
        for (ElementId v : cx) {
            if (!cy.count(v)) {
                report.violations.push_back("monotonicity: sample " + std::to_string(i));
                break;
            }
        }
        if (sys.close(cx) != cx)
            report.violations.push_back("idempotence: sample " + std::to_string(i));
    }
    return report;
}

WitnessReport independence_witness(const ClosureSystem& sys, const ElementSet& s) {
    WitnessReport report;
    for (ElementId z : s) {
        ElementSet rest = s;
        rest.erase(z);
        const bool inside = sys.close(rest).count(z) > 0;
        report.memberships.emplace_back(z, inside);
        if (inside) report.independent = false;
    }
    return report;
}

} // namespace cantorcert::closure

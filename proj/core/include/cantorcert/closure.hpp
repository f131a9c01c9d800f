#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace cantorcert::closure {

using ElementId = std::uint32_t;
using ElementSet = std::set<ElementId>;

/// Finite closure system: a universe of opaque element ids and an operator on
/// subsets. The operator is expected to be extensive, monotone and idempotent;
/// audit_closure spot-checks those axioms on sampled subsets.
struct ClosureSystem {
    std::vector<ElementId> universe;
    std::function<ElementSet(const ElementSet&)> close;
    std::string name;
};

/// Ordered family D_1 .. D_N of nonempty subsets of the universe.
struct TargetFamily {
    std::vector<ElementSet> members;
};

/// Deterministic selector from nonempty subsets; rho(X) must be in X.
struct ChoiceRule {
    std::function<ElementId(const ElementSet&)> pick;
};

ChoiceRule least_element_rule();

/// Nonzero vectors of GF(2)^dim encoded as bitmasks; closure is linear span
/// intersected with the universe.
ClosureSystem make_span_gf2_system(int dim);

/// cl(X) = X, a valid (trivial) closure operator.
ClosureSystem make_identity_system(std::vector<ElementId> universe);

struct GreedyOutcome {
    bool ok = false;
    ElementSet a;
    ElementSet b;
    // on failure: which family member ran empty, while picking 'x' or 'y'
    int failed_index = -1;
    char failed_step = 0;
};

/// For each family member in order picks x outside the closure of everything
/// chosen so far, then y outside the closure including x. On success A and B
/// are disjoint, meet every member, and A union B is independent: no element
/// lies in the closure of the others. Failure (a subtracted set ran empty) is
/// reported, not thrown; it is the finite analogue of the universe being too
/// small for the family.
GreedyOutcome greedy_pair_build(const ClosureSystem& sys, const TargetFamily& fam,
                                const ChoiceRule& rho = least_element_rule());

struct AuditReport {
    long samples = 0;
    std::vector<std::string> violations;
    bool clean() const { return violations.empty(); }
};

/// Spot-checks extensivity, monotonicity (on nested sampled pairs) and
/// idempotence on `sample_count` seeded random subsets.
AuditReport audit_closure(const ClosureSystem& sys, int sample_count, std::uint64_t seed);

struct WitnessReport {
    std::vector<std::pair<ElementId, bool>> memberships; // z -> z in cl(S \ {z})
    bool independent = true;
};

/// S is independent iff no element lies in the closure of the rest.
WitnessReport independence_witness(const ClosureSystem& sys, const ElementSet& s);

} // namespace cantorcert::closure

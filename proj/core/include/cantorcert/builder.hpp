#pragma once

#include "cantorcert/boxcert.hpp"
#include "cantorcert/interval.hpp"
#include "cantorcert/ternary.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cantorcert::builder {

enum class Mode { standard_embedded, target_embedded, free_form };

struct BuilderCaps {
    int k_max = 3;        // final depth of the construction
    int n_max = 2;        // arity cap for avoidance conditions
    long budget = 100000; // distinct boxes certified per extend_level call
    long poly_prefix = 50; // per-arity enumeration prefix certified on the final level
};

/// Leveled tree of 2^k pairwise disjoint nested closed intervals plus the
/// certificate ledger that justifies it. Level k is levels[k-1], in increasing
/// order. In standard mode every interval sits inside the matching
/// middle-thirds interval; in target mode inside the matching target interval.
struct CantorApproximation {
    Mode mode = Mode::free_form;
    BuilderCaps caps;
    std::vector<std::vector<RationalInterval>> levels;
    std::vector<std::vector<RationalInterval>> target_levels; // target mode only
    std::vector<boxcert::Certificate> ledger;
    int certified_through = 0; // deepest level whose conditions are enforced

    int depth() const { return static_cast<int>(levels.size()); }
};

/// Certification of the reported condition failed: either the node budget ran
/// out, or (hopeless) no interval assignment can satisfy the condition while
/// keeping deeper host intervals reachable, so no budget would suffice. The
/// level being extended is discarded; the caller's approximation is untouched.
struct BudgetExhausted : std::runtime_error {
    int n;
    Integer m;
    std::vector<int> phi;
    bool hopeless;
    BudgetExhausted(int n_, Integer m_, std::vector<int> phi_, bool hopeless_ = false);
};

/// The exact middle-thirds skeleton down to `depth`; no certificates.
CantorApproximation standard_tree(int depth);

/// Level-1 pair per mode; the ledger starts empty (conditions are enforced by
/// the first extend_level, which may still shrink level 1).
CantorApproximation new_approximation(Mode mode, const std::optional<CantorApproximation>& target,
                                      const BuilderCaps& caps);

/// Appends one level: enforces any pending conditions on the current deepest
/// level, places two children inside each interval, then enforces the new
/// level's avoidance condition, shrinking new intervals as needed. On reaching
/// caps.k_max, additionally certifies the per-arity enumeration prefix on the
/// final level so that samples are annihilation-free up to poly_prefix.
/// Transactional: throws BudgetExhausted without touching the input.
CantorApproximation extend_level(const CantorApproximation& approx);

struct ConditionFailure {
    int level;
    int n;
    Integer m;
    std::vector<int> phi;
    RationalInterval enclosure;
};

struct VerifyReport {
    long checked = 0;
    std::map<std::pair<int, int>, long> checked_by; // (stage, n) -> conditions checked
    std::vector<ConditionFailure> failures;
    bool all_certified() const { return failures.empty(); }
};

/// Re-derives from scratch every avoidance condition for stages 1..stage:
/// polynomial (n, m=stage') on every injection of {1..n} into the stage'
/// intervals, n <= min(2^stage', n_max). Failures are report entries.
VerifyReport verify_conditions(const CantorApproximation& approx, int stage, int n_max);

enum class SampleRule { midpoint, left_endpoint };

/// One rational per deepest-level interval; pairwise distinct.
std::vector<Rational> sample_points(const CantorApproximation& approx, SampleRule rule);

struct Annihilation {
    int n;
    Integer m;
    std::vector<Rational> tuple;
};

struct IndependenceReport {
    long evaluations = 0;
    std::vector<Annihilation> zeros;
};

/// Brute-force oracle, independent of the interval machinery: exact evaluation
/// of every enumerated polynomial with m <= m_max at every ascending
/// combination of n <= n_max distinct points. Any zero is an annihilation.
IndependenceReport independence_check(const std::vector<Rational>& points, int n_max,
                                      const Integer& m_max);

/// Machine check of the structural invariants; returns human-readable
/// violations, empty when clean.
std::vector<std::string> check_invariants(const CantorApproximation& approx);

const char* mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

} // namespace cantorcert::builder

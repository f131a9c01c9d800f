#pragma once

#include "cantorcert/interval.hpp"
#include "cantorcert/polyenum.hpp"

#include <optional>
#include <vector>

namespace cantorcert::boxcert {

/// Range-enclosure proof that a polynomial cannot vanish on a box.
/// certified implies 0 is outside `enclosure`, hence outside the true range.
struct Certificate {
    int n_vars = 0;
    Integer m_index = 0;          // index in the arity-n enumeration
    int level = 0;                // tree level the box factors came from (0 = free-standing)
    std::vector<int> phi;         // 1-based interval indices forming the box, when applicable
    Box box;
    RationalInterval enclosure;
    bool certified = false;
};

/// Certified iff the interval enclosure of p over box excludes 0. An unknown
/// verdict means only that the enclosure straddles 0, never that p vanishes.
Certificate certify_nonvanishing(const polyenum::IntPolynomial& p, const Box& box);

/// Same, with the enumeration index supplied by the caller (avoids index_of).
Certificate certify_nonvanishing(const polyenum::IntPolynomial& p, const Box& box,
                                 const Integer& m_index);

struct RefineResult {
    std::optional<Box> box;   // certified sub-box of positive volume, if found
    long explored = 0;        // distinct boxes certified against the budget
    bool hopeless = false;    // no core-preserving sub-box can ever certify
};

/// Per-factor protected cores: a factor with a core is only ever shrunk on the
/// outside of it, so the returned box still contains every core. Used to keep
/// room for deeper nested levels; empty = unconstrained.
using FactorCores = std::vector<std::optional<RationalInterval>>;

/// Searches for a positive-volume sub-box on which p certifies as nonvanishing.
/// Recursive bisection of the widest splittable factor, depth-first with the
/// left child first, run under iterative deepening so a zero pinned to one
/// edge cannot starve the search; each distinct box counts once against the
/// budget. Deterministic. Returns nullopt when the budget is exhausted.
RefineResult refine_to_avoid(const polyenum::IntPolynomial& p, const Box& box, long budget,
                             const FactorCores& cores = {});

} // namespace cantorcert::boxcert

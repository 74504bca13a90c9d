// The four measures of a granular rule: source/target coverage and
// source/target confidence, all evaluated with exact rational comparisons.
#pragma once

#include <cstddef>

#include "gram/fraction.hpp"
#include "gram/model.hpp"

namespace gram {

struct Thresholds {
    Fraction ms;  // minimal source coverage
    Fraction mt;  // minimal target coverage
    Fraction mc;  // minimal source confidence
    Fraction tc;  // minimal target confidence

    // Each must lie in (0, 1].
    static Thresholds checked(Fraction ms, Fraction mt, Fraction mc, Fraction tc);
};

struct TargetConfidenceResult {
    Fraction tconfidence;
    std::size_t min_common_targets;  // how many targets an mc-share of the LHS each reaches
    bool rank_clamped;               // floor(mc*|LH|) was 0 and got clamped to 1
};

struct RuleMeasures {
    Fraction scoverage;
    Fraction tcoverage;
    Fraction sconfidence;  // evaluated at a given tc
    Fraction tconfidence;  // evaluated at a given mc
    std::size_t min_common_targets;
    bool rank_clamped;
};

struct GranularRule {
    Granule lhs;  // side == source
    Granule rhs;  // side == target
    RuleMeasures measures;
};

// |LH| / universe.
Fraction source_coverage(const Granule& lhs, std::size_t source_universe);

// |RH| / universe.
Fraction target_coverage(const Granule& rhs, std::size_t target_universe);

// Share of LHS objects connected to at least a tc-fraction of the RHS
// extension; the per-object ratio is compared exactly.
Fraction source_confidence(const Granule& lhs, const Granule& rhs,
                           const BinaryRelation& relation, const Fraction& tc);

// Sorts the per-object connection counts descending, takes the element at
// rank max(1, floor(mc*|LH|)) and divides it by |RH|.
TargetConfidenceResult target_confidence(const Granule& lhs, const Granule& rhs,
                                         const BinaryRelation& relation, const Fraction& mc);

// All four measures; sconfidence uses thresholds.tc, tconfidence thresholds.mc.
RuleMeasures evaluate_rule(const Granule& lhs, const Granule& rhs,
                           const BinaryRelation& relation, const Thresholds& thresholds);

}  // namespace gram

// Rule measure evaluation. Thresholded comparisons are exact: per-object
// connection shares are held as integer pairs and cross-multiplied.
#include "gram/measures.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gram/errors.hpp"
#include "gram/index_set.hpp"

namespace gram {

namespace {

void check_pair(const Granule& lhs, const Granule& rhs, const BinaryRelation& relation) {
    if (lhs.side != Side::source || rhs.side != Side::target)
        throw ParamError("rule sides are swapped");
    if (lhs.extension.universe() != relation.source_size() ||
        rhs.extension.universe() != relation.target_size())
        throw ParamError("granule universe does not match the relation");
    if (lhs.extension.empty()) throw ParamError("empty left-hand extension");
    if (rhs.extension.empty()) throw ParamError("empty right-hand extension");
}

std::size_t floor_times(const Fraction& f, std::size_t n) {
    const __int128 scaled = static_cast<__int128>(f.num()) * static_cast<__int128>(n);
    return static_cast<std::size_t>(scaled / f.den());
}

}  // namespace

Thresholds Thresholds::checked(Fraction ms, Fraction mt, Fraction mc, Fraction tc) {
    const Fraction one(1, 1);
    const auto in_unit = [&](const Fraction& f, const char* name) {
        if (f.num() == 0 || one < f)
            throw ParamError(std::string(name) + " must lie in (0, 1], got " + f.to_string());
    };
    in_unit(ms, "ms");
    in_unit(mt, "mt");
    in_unit(mc, "mc");
    in_unit(tc, "tc");
    return Thresholds{ms, mt, mc, tc};
}

Fraction source_coverage(const Granule& lhs, std::size_t source_universe) {
    return support(lhs.extension, source_universe);
}

Fraction target_coverage(const Granule& rhs, std::size_t target_universe) {
    return support(rhs.extension, target_universe);
}

Fraction source_confidence(const Granule& lhs, const Granule& rhs,
                           const BinaryRelation& relation, const Fraction& tc) {
    check_pair(lhs, rhs, relation);
    const std::size_t rh_size = rhs.extension.count();
    std::size_t satisfied = 0;
    for (std::size_t x : lhs.extension.indices()) {
        const std::size_t common = IndexSet::intersection_count(relation.neighbors(x), rhs.extension);
        if (ratio_at_least(static_cast<std::int64_t>(common), static_cast<std::int64_t>(rh_size), tc))
            ++satisfied;
    }
    return Fraction::ratio(satisfied, lhs.extension.count());
}

TargetConfidenceResult target_confidence(const Granule& lhs, const Granule& rhs,
                                         const BinaryRelation& relation, const Fraction& mc) {
    check_pair(lhs, rhs, relation);
    std::vector<std::size_t> common_counts;
    common_counts.reserve(lhs.extension.count());
    for (std::size_t x : lhs.extension.indices())
        common_counts.push_back(IndexSet::intersection_count(relation.neighbors(x), rhs.extension));
    std::sort(common_counts.begin(), common_counts.end(), std::greater<>());

    const std::size_t n = common_counts.size();
    std::size_t rank = floor_times(mc, n);
    const bool clamped = rank == 0;
    rank = std::clamp<std::size_t>(rank, 1, n);

    const std::size_t reached = common_counts[rank - 1];
    return TargetConfidenceResult{Fraction::ratio(reached, rhs.extension.count()), reached, clamped};
}

RuleMeasures evaluate_rule(const Granule& lhs, const Granule& rhs,
                           const BinaryRelation& relation, const Thresholds& thresholds) {
    const TargetConfidenceResult tcr = target_confidence(lhs, rhs, relation, thresholds.mc);
    return RuleMeasures{source_coverage(lhs, relation.source_size()),
                        target_coverage(rhs, relation.target_size()),
                        source_confidence(lhs, rhs, relation, thresholds.tc),
                        tcr.tconfidence,
                        tcr.min_common_targets,
                        tcr.rank_clamped};
}

}  // namespace gram

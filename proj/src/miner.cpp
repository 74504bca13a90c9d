// Candidate enumeration with anti-monotone pruning and the two mining
// kernels. The parallel kernel fans out over source candidates and merges
// per-candidate slots in index order, so its output is thread-count
// independent before the final canonical sort even runs.
#include "gram/miner.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "gram/errors.hpp"
#include "gram/index_set.hpp"

namespace gram {

namespace {

struct ValueBlock {
    AttributeValue value;
    IndexSet extension;
};

// Distinct values of one column with their blocks, in canonical value order.
std::vector<ValueBlock> column_blocks(const InformationSystem& is, std::size_t attr) {
    std::vector<ValueBlock> blocks;
    for (std::size_t i = 0; i < is.object_count(); ++i) {
        const AttributeValue& v = is.cell(i, attr);
        auto it = std::find_if(blocks.begin(), blocks.end(),
                               [&](const ValueBlock& b) { return value_equal(b.value, v); });
        if (it == blocks.end()) {
            blocks.push_back(ValueBlock{v, IndexSet(is.object_count())});
            it = std::prev(blocks.end());
        }
        it->extension.set(i);
    }
    std::sort(blocks.begin(), blocks.end(), [](const ValueBlock& a, const ValueBlock& b) {
        return value_less(a.value, b.value);
    });
    return blocks;
}

struct Enumerator {
    const InformationSystem& is;
    Side side;
    const Fraction& min_coverage;
    std::vector<std::vector<ValueBlock>> blocks;
    std::vector<Descriptor> intension;
    std::vector<Granule> out;

    void extend(std::size_t first_attr, const IndexSet& extension) {
        for (std::size_t j = first_attr; j < blocks.size(); ++j) {
            for (const ValueBlock& vb : blocks[j]) {
                IndexSet next = IndexSet::intersection(extension, vb.extension);
                if (!ratio_at_least(static_cast<std::int64_t>(next.count()),
                                    static_cast<std::int64_t>(is.object_count()), min_coverage))
                    continue;
                intension.push_back(Descriptor{j, vb.value});
                out.push_back(Granule{side, intension, next});
                extend(j + 1, next);
                intension.pop_back();
            }
        }
    }
};

std::vector<GranularRule> evaluate_source_candidate(const Granule& lhs,
                                                    const std::vector<Granule>& targets,
                                                    const BinaryRelation& relation,
                                                    const Thresholds& thresholds,
                                                    std::size_t& rank_clamps) {
    std::vector<GranularRule> kept;
    for (const Granule& rhs : targets) {
        const RuleMeasures m = evaluate_rule(lhs, rhs, relation, thresholds);
        if (m.rank_clamped) ++rank_clamps;
        if (m.sconfidence < thresholds.mc || m.tconfidence < thresholds.tc) continue;
        kept.push_back(GranularRule{lhs, rhs, m});
    }
    return kept;
}

MiningResult assemble(CandidateSet candidates, std::vector<std::vector<GranularRule>> slots,
                      const Thresholds& thresholds, std::size_t rank_clamps) {
    MiningResult result;
    result.thresholds = thresholds;
    result.source_candidates = candidates.source.size();
    result.target_candidates = candidates.target.size();
    result.rank_clamp_count = rank_clamps;
    for (std::vector<GranularRule>& slot : slots)
        for (GranularRule& rule : slot) result.rules.push_back(std::move(rule));
    std::sort(result.rules.begin(), result.rules.end(), rule_less);
    return result;
}

}  // namespace

std::vector<Granule> enumerate_granules(const InformationSystem& is, Side side,
                                        const Fraction& min_coverage) {
    if (min_coverage.num() == 0) throw ParamError("minimal coverage must be positive");
    for (std::size_t j = 0; j < is.attribute_count(); ++j)
        if (is.column_cell_kind(j) == CellKind::numeric)
            throw ParamError("attribute " + is.attribute(j).name +
                             " is numeric; discretize or drop it before mining");
    if (is.object_count() == 0) return {};

    Enumerator e{is, side, min_coverage, {}, {}, {}};
    e.blocks.reserve(is.attribute_count());
    for (std::size_t j = 0; j < is.attribute_count(); ++j) e.blocks.push_back(column_blocks(is, j));
    e.extend(0, IndexSet::full(is.object_count()));
    return std::move(e.out);
}

MiningResult mine_serial(const Mmer& mmer, const Thresholds& thresholds) {
    CandidateSet candidates{enumerate_granules(mmer.source, Side::source, thresholds.ms),
                            enumerate_granules(mmer.target, Side::target, thresholds.mt)};
    std::vector<std::vector<GranularRule>> slots(candidates.source.size());
    std::size_t rank_clamps = 0;
    for (std::size_t i = 0; i < candidates.source.size(); ++i)
        slots[i] = evaluate_source_candidate(candidates.source[i], candidates.target,
                                             mmer.relation, thresholds, rank_clamps);
    return assemble(std::move(candidates), std::move(slots), thresholds, rank_clamps);
}

MiningResult mine(const Mmer& mmer, const Thresholds& thresholds, int threads) {
    CandidateSet candidates{enumerate_granules(mmer.source, Side::source, thresholds.ms),
                            enumerate_granules(mmer.target, Side::target, thresholds.mt)};
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(candidates.source.size());
    std::vector<std::vector<GranularRule>> slots(candidates.source.size());
    std::vector<std::size_t> clamps(candidates.source.size(), 0);
    const int team = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(team)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const std::size_t u = static_cast<std::size_t>(i);
        slots[u] = evaluate_source_candidate(candidates.source[u], candidates.target,
                                             mmer.relation, thresholds, clamps[u]);
    }

    std::size_t rank_clamps = 0;
    for (std::size_t c : clamps) rank_clamps += c;
    return assemble(std::move(candidates), std::move(slots), thresholds, rank_clamps);
}

CountSummary count_summary(const MiningResult& result) {
    return CountSummary{result.source_candidates, result.target_candidates,
                        result.source_candidates * result.target_candidates,
                        result.rules.size()};
}

bool rule_less(const GranularRule& a, const GranularRule& b) {
    const auto side_less = [](const std::vector<Descriptor>& x, const std::vector<Descriptor>& y,
                              bool& decided) {
        decided = true;
        if (x.size() != y.size()) return x.size() < y.size();
        if (!intension_equal(x, y)) return intension_less(x, y);
        decided = false;
        return false;
    };
    bool decided = false;
    const bool lhs_less = side_less(a.lhs.intension, b.lhs.intension, decided);
    if (decided) return lhs_less;
    return side_less(a.rhs.intension, b.rhs.intension, decided);
}

}  // namespace gram

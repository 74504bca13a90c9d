// Candidate enumeration and rule mining over a two-table system.
//
// mine() is the OpenMP kernel (parallel across source candidates);
// mine_serial() is the plain reference implementation kept for testing and
// benchmarking. Both produce identical, canonically ordered results.
#pragma once

#include <cstddef>
#include <vector>

#include "gram/measures.hpp"
#include "gram/model.hpp"

namespace gram {

struct CandidateSet {
    std::vector<Granule> source;  // scoverage >= ms
    std::vector<Granule> target;  // tcoverage >= mt
};

// All granules with non-empty intension and support >= min_coverage,
// enumerated depth-first in attribute order with anti-monotone pruning.
// Distinct intensions with identical extensions are both kept. Columns must
// be nominal or interval valued; a numeric column is a ParamError.
std::vector<Granule> enumerate_granules(const InformationSystem& is, Side side,
                                        const Fraction& min_coverage);

struct MiningResult {
    std::vector<GranularRule> rules;  // canonical order
    std::size_t source_candidates = 0;
    std::size_t target_candidates = 0;
    Thresholds thresholds;
    std::size_t rank_clamp_count = 0;  // confidence evaluations that clamped the rank to 1
};

// Evaluates every candidate pair and keeps rules passing all four thresholds.
// threads <= 0 uses the OpenMP default. Output is independent of the thread
// count.
MiningResult mine(const Mmer& mmer, const Thresholds& thresholds, int threads = 0);

// Reference implementation: same contract as mine(), no parallelism.
MiningResult mine_serial(const Mmer& mmer, const Thresholds& thresholds);

struct CountSummary {
    std::size_t source_candidates;
    std::size_t target_candidates;
    std::size_t evaluated_pairs;
    std::size_t rules;
};

CountSummary count_summary(const MiningResult& result);

// Canonical order: (|LHS intension|, LHS descriptors, |RHS intension|, RHS
// descriptors), descriptors compared by (attribute index, value).
bool rule_less(const GranularRule& a, const GranularRule& b);

}  // namespace gram

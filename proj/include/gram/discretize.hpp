// Discretization of numeric columns: equal-width and equal-frequency fitted
// chains plus manual boundary lists, and application of a chain to a column.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gram/model.hpp"

namespace gram {

// Ordered cut points b0 < b1 < ... < bk defining the intervals
// [b0,b1), ..., [b_{k-1},bk] (last one closed). A single boundary denotes the
// degenerate closed interval [v,v] over a constant column.
struct BoundaryChain {
    std::vector<double> boundaries;

    std::size_t interval_count() const {
        return boundaries.size() <= 1 ? boundaries.size() : boundaries.size() - 1;
    }
    bool degenerate() const { return boundaries.size() == 1; }
    Interval interval(std::size_t i) const;

    // Validates non-empty, finite, strictly increasing boundaries.
    static BoundaryChain manual(std::vector<double> boundaries);

    friend bool operator==(const BoundaryChain& a, const BoundaryChain& b) {
        return a.boundaries == b.boundaries;
    }
};

enum class DiscretizeMethod { equal_width, equal_frequency, manual };

std::string method_name(DiscretizeMethod m);
DiscretizeMethod method_from_name(std::string_view name);  // ParamError on unknown

struct DiscretizerEntry {
    DiscretizeMethod method;
    std::size_t k = 0;                          // for the automatic methods
    std::optional<BoundaryChain> manual_chain;  // for manual
};

// Per-attribute plan, keyed by attribute name.
struct DiscretizerSpec {
    std::map<std::string, DiscretizerEntry> entries;
};

struct FittedChain {
    BoundaryChain chain;
    std::vector<std::string> warnings;  // degenerate range, clamped interval count
};

// Boundaries min + i*(max-min)/k for i = 0..k; the last boundary is pinned to
// max. k = 0 is a ParamError, an empty value list a DataError.
FittedChain equal_width_boundaries(std::span<const double> values, std::size_t k);

// Sorts ascending, cuts after the ceil(i*n/k)-th value (1-based), advances a
// cut past a run of duplicates rather than splitting it, and places each
// interior boundary at the midpoint of the distinct values around the cut.
// Fewer than k distinct values clamp the chain with a warning.
FittedChain equal_frequency_boundaries(std::span<const double> values, std::size_t k);

// The unique interval containing v. v outside [b0, bk] is a DataError (the
// chain was applied to data it was not fitted on).
Interval assign_interval(const BoundaryChain& chain, double v);

struct FittedAttribute {
    std::string attribute;
    DiscretizeMethod method;
    std::size_t requested_k;  // 0 for manual
    BoundaryChain chain;
    std::vector<std::string> warnings;
};

struct DiscretizeReport {
    std::vector<FittedAttribute> fitted;  // in attribute order of the system
};

// Replaces each column `spec` names by interval values fitted on that
// column; everything else passes through untouched. Naming a nominal column
// is a TypeError, an unknown attribute a SchemaError.
std::pair<InformationSystem, DiscretizeReport> discretize_system(const InformationSystem& is,
                                                                 const DiscretizerSpec& spec);

}  // namespace gram

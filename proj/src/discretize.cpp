// Equal-width and equal-frequency chain fitting, manual chains, and the
// application of a fitted chain to a numeric column.
#include "gram/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "gram/errors.hpp"

namespace gram {

namespace {

void require_finite(std::span<const double> values) {
    for (double v : values)
        if (!std::isfinite(v)) throw DataError("non-finite value in numeric column");
}

// Collapses accidental equal neighbors (possible only at the limits of double
// precision) so the chain invariant b0 < b1 < ... < bk always holds.
std::vector<double> strictly_increasing(std::vector<double> boundaries) {
    boundaries.erase(std::unique(boundaries.begin(), boundaries.end()), boundaries.end());
    return boundaries;
}

FittedChain finish_fit(std::vector<double> boundaries, std::size_t k) {
    FittedChain fit;
    fit.chain.boundaries = strictly_increasing(std::move(boundaries));
    const std::size_t fitted = fit.chain.interval_count();
    if (fit.chain.degenerate())
        fit.warnings.push_back("constant column, single interval [" +
                               format_double(fit.chain.boundaries.front()) + "," +
                               format_double(fit.chain.boundaries.front()) + "]");
    else if (fitted < k)
        fit.warnings.push_back("requested " + std::to_string(k) + " intervals, fitted " +
                               std::to_string(fitted));
    return fit;
}

}  // namespace

Interval BoundaryChain::interval(std::size_t i) const {
    if (boundaries.empty()) throw ParamError("interval of an empty chain");
    if (degenerate()) {
        if (i != 0) throw ParamError("interval index out of range");
        return Interval{boundaries.front(), boundaries.front(), true};
    }
    const std::size_t count = interval_count();
    if (i >= count) throw ParamError("interval index out of range");
    return Interval{boundaries[i], boundaries[i + 1], i + 1 == count};
}

BoundaryChain BoundaryChain::manual(std::vector<double> boundaries) {
    if (boundaries.empty()) throw ParamError("empty boundary list");
    for (double b : boundaries)
        if (!std::isfinite(b)) throw ParamError("non-finite boundary");
    for (std::size_t i = 1; i < boundaries.size(); ++i)
        if (!(boundaries[i - 1] < boundaries[i]))
            throw ParamError("boundaries must be strictly increasing");
    return BoundaryChain{std::move(boundaries)};
}

std::string method_name(DiscretizeMethod m) {
    switch (m) {
        case DiscretizeMethod::equal_width: return "width";
        case DiscretizeMethod::equal_frequency: return "frequency";
        case DiscretizeMethod::manual: return "manual";
    }
    throw ParamError("unknown discretize method");
}

DiscretizeMethod method_from_name(std::string_view name) {
    if (name == "width" || name == "equal_width") return DiscretizeMethod::equal_width;
    if (name == "frequency" || name == "equal_frequency") return DiscretizeMethod::equal_frequency;
    if (name == "manual") return DiscretizeMethod::manual;
    throw ParamError("unknown discretize method: " + std::string(name));
}

FittedChain equal_width_boundaries(std::span<const double> values, std::size_t k) {
    if (k == 0) throw ParamError("interval count must be positive");
    if (values.empty()) throw DataError("cannot fit a chain on an empty column");
    require_finite(values);

    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *min_it;
    const double hi = *max_it;
    if (lo == hi) return finish_fit({lo}, k);

    const double width = (hi - lo) / static_cast<double>(k);
    std::vector<double> boundaries;
    boundaries.reserve(k + 1);
    for (std::size_t i = 0; i < k; ++i) boundaries.push_back(lo + static_cast<double>(i) * width);
    boundaries.push_back(hi);
    return finish_fit(std::move(boundaries), k);
}

FittedChain equal_frequency_boundaries(std::span<const double> values, std::size_t k) {
    if (k == 0) throw ParamError("interval count must be positive");
    if (values.empty()) throw DataError("cannot fit a chain on an empty column");
    require_finite(values);

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    if (sorted.front() == sorted.back()) return finish_fit({sorted.front()}, k);

    std::vector<double> boundaries{sorted.front()};
    std::size_t previous_cut = 0;
    for (std::size_t i = 1; i < k; ++i) {
        // Cut after the ceil(i*n/k)-th value, pushed past any duplicate run so
        // equal values never land in different intervals.
        std::size_t cut = (i * n + k - 1) / k;
        while (cut < n && sorted[cut] == sorted[cut - 1]) ++cut;
        if (cut >= n || cut <= previous_cut) continue;
        boundaries.push_back(std::midpoint(sorted[cut - 1], sorted[cut]));
        previous_cut = cut;
    }
    boundaries.push_back(sorted.back());
    return finish_fit(std::move(boundaries), k);
}

Interval assign_interval(const BoundaryChain& chain, double v) {
    if (chain.boundaries.empty()) throw ParamError("empty chain");
    if (!std::isfinite(v)) throw DataError("non-finite value");
    if (v < chain.boundaries.front() || v > chain.boundaries.back())
        throw DataError("value " + format_double(v) + " outside fitted range [" +
                        format_double(chain.boundaries.front()) + "," +
                        format_double(chain.boundaries.back()) + "]");
    if (chain.degenerate()) return chain.interval(0);
    const auto it = std::upper_bound(chain.boundaries.begin(), chain.boundaries.end(), v);
    std::size_t idx = static_cast<std::size_t>(it - chain.boundaries.begin()) - 1;
    if (idx >= chain.interval_count()) idx = chain.interval_count() - 1;  // v == bk
    return chain.interval(idx);
}

std::pair<InformationSystem, DiscretizeReport> discretize_system(const InformationSystem& is,
                                                                 const DiscretizerSpec& spec) {
    for (const auto& [name, entry] : spec.entries) {
        const std::size_t j = is.attribute_index(name);
        if (is.column_cell_kind(j) != CellKind::numeric)
            throw TypeError("attribute " + name + " is not an undiscretized numeric column");
        if (entry.method == DiscretizeMethod::manual && !entry.manual_chain)
            throw ParamError("manual method without boundaries for " + name);
    }

    std::vector<std::vector<AttributeValue>> columns;
    columns.reserve(is.attribute_count());
    DiscretizeReport report;
    for (std::size_t j = 0; j < is.attribute_count(); ++j) {
        const auto entry_it = spec.entries.find(is.attribute(j).name);
        if (entry_it == spec.entries.end()) {
            columns.push_back(is.column(j));
            continue;
        }
        const DiscretizerEntry& entry = entry_it->second;

        std::vector<double> raw;
        raw.reserve(is.object_count());
        for (const AttributeValue& v : is.column(j)) raw.push_back(std::get<Numeric>(v).value);

        FittedChain fit;
        if (entry.method == DiscretizeMethod::manual)
            fit.chain = *entry.manual_chain;
        else if (entry.method == DiscretizeMethod::equal_width)
            fit = equal_width_boundaries(raw, entry.k);
        else
            fit = equal_frequency_boundaries(raw, entry.k);

        std::vector<AttributeValue> column;
        column.reserve(raw.size());
        for (double v : raw) column.emplace_back(assign_interval(fit.chain, v));
        columns.push_back(std::move(column));

        report.fitted.push_back(FittedAttribute{
            is.attribute(j).name, entry.method,
            entry.method == DiscretizeMethod::manual ? 0 : entry.k, std::move(fit.chain),
            std::move(fit.warnings)});
    }
    return {InformationSystem(is.object_ids(), is.attributes(), std::move(columns)),
            std::move(report)};
}

}  // namespace gram

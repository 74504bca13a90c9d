// Seeded random two-table systems for the property and acceptance tests.
// Small universes, nominal and interval columns only (mining rejects raw
// numeric columns by design).
#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gram/measures.hpp"
#include "gram/model.hpp"

namespace testgen {

struct RandomMmer {
    gram::InformationSystem source;
    gram::InformationSystem target;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    gram::Mmer mmer() const {
        return gram::Mmer(source, target,
                          gram::BinaryRelation(source.object_count(), target.object_count(),
                                               pairs));
    }
};

inline gram::InformationSystem random_system(std::mt19937& rng, std::size_t max_objects,
                                             const char* id_prefix) {
    std::uniform_int_distribution<std::size_t> object_dist(1, max_objects);
    std::uniform_int_distribution<std::size_t> attr_dist(1, 4);
    std::uniform_int_distribution<std::size_t> value_dist(1, 4);
    std::uniform_int_distribution<int> interval_dist(0, 3);  // 1 in 4 columns holds intervals

    const std::size_t objects = object_dist(rng);
    const std::size_t attrs = attr_dist(rng);

    std::vector<std::string> ids;
    for (std::size_t i = 0; i < objects; ++i) ids.push_back(id_prefix + std::to_string(i));

    std::vector<gram::Attribute> attributes;
    std::vector<std::vector<gram::AttributeValue>> columns;
    for (std::size_t j = 0; j < attrs; ++j) {
        const std::size_t value_count = value_dist(rng);
        std::vector<gram::AttributeValue> pool;
        if (interval_dist(rng) == 0) {
            for (std::size_t v = 0; v < value_count; ++v)
                pool.push_back(gram::Interval{static_cast<double>(v), static_cast<double>(v + 1),
                                              v + 1 == value_count});
        } else {
            for (std::size_t v = 0; v < value_count; ++v)
                pool.push_back(gram::Nominal{"v" + std::to_string(v)});
        }
        attributes.push_back(gram::Attribute{
            "a" + std::to_string(j),
            std::holds_alternative<gram::Nominal>(pool.front()) ? gram::AttrKind::nominal
                                                                : gram::AttrKind::numeric});
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::vector<gram::AttributeValue> column;
        for (std::size_t i = 0; i < objects; ++i) column.push_back(pool[pick(rng)]);
        columns.push_back(std::move(column));
    }
    return gram::InformationSystem(std::move(ids), std::move(attributes), std::move(columns));
}

inline RandomMmer random_mmer(std::mt19937& rng) {
    gram::InformationSystem source = random_system(rng, 12, "s");
    gram::InformationSystem target = random_system(rng, 10, "t");
    std::uniform_real_distribution<double> density_dist(0.15, 0.7);
    std::bernoulli_distribution flip(density_dist(rng));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < source.object_count(); ++i)
        for (std::size_t j = 0; j < target.object_count(); ++j)
            if (flip(rng)) pairs.emplace_back(i, j);
    return RandomMmer{std::move(source), std::move(target), std::move(pairs)};
}

inline gram::Fraction random_threshold(std::mt19937& rng) {
    static const std::vector<gram::Fraction> pool = {
        {1, 10}, {1, 5}, {3, 10}, {2, 5}, {1, 2}, {3, 5}, {7, 10}, {4, 5}, {9, 10}, {1, 1}};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

inline gram::Thresholds random_thresholds(std::mt19937& rng) {
    return gram::Thresholds::checked(random_threshold(rng), random_threshold(rng),
                                     random_threshold(rng), random_threshold(rng));
}

}  // namespace testgen

// In-code copy of the customer/product/buys example used across the tests.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "gram/discretize.hpp"
#include "gram/model.hpp"

namespace toy {

inline gram::InformationSystem customers() {
    using gram::AttributeValue;
    using gram::Nominal;
    using gram::Numeric;
    const auto noms = [](std::initializer_list<const char*> labels) {
        std::vector<AttributeValue> column;
        for (const char* l : labels) column.push_back(Nominal{l});
        return column;
    };
    const auto nums = [](std::initializer_list<double> values) {
        std::vector<AttributeValue> column;
        for (double v : values) column.push_back(Numeric{v});
        return column;
    };
    return gram::InformationSystem(
        {"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10"},
        {{"Age", gram::AttrKind::numeric},
         {"Gender", gram::AttrKind::nominal},
         {"Married", gram::AttrKind::nominal},
         {"Salary", gram::AttrKind::numeric}},
        {nums({20, 25, 23, 26, 32, 36, 39, 40, 35, 34}),
         noms({"Male", "Female", "Male", "Female", "Male", "Male", "Male", "Female", "Female",
               "Male"}),
         noms({"No", "Yes", "No", "Yes", "Yes", "Yes", "Yes", "Yes", "Yes", "Yes"}),
         nums({2000, 2800, 3500, 2400, 5600, 4200, 5000, 5000, 3400, 3600})});
}

inline gram::InformationSystem products() {
    using gram::AttributeValue;
    using gram::Nominal;
    using gram::Numeric;
    const auto noms = [](std::initializer_list<const char*> labels) {
        std::vector<AttributeValue> column;
        for (const char* l : labels) column.push_back(Nominal{l});
        return column;
    };
    std::vector<AttributeValue> price;
    for (double v : {2.0, 4.0, 5.5, 8.0, 18.0, 3.0, 5.0, 16.5}) price.push_back(Numeric{v});
    return gram::InformationSystem(
        {"p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8"},
        {{"Country", gram::AttrKind::nominal},
         {"Category", gram::AttrKind::nominal},
         {"Color", gram::AttrKind::nominal},
         {"Price", gram::AttrKind::numeric}},
        {noms({"China", "Australia", "China", "China", "Australia", "China", "France", "France"}),
         noms({"Staple", "Staple", "Daily", "Meat", "Meat", "Alcohol", "Alcohol", "Alcohol"}),
         noms({"Yellow", "Black", "White", "Red", "Red", "Yellow", "Yellow", "White"}),
         std::move(price)});
}

// 43 purchase pairs, 0-based (customer index, product index).
inline std::vector<std::pair<std::size_t, std::size_t>> buys_pairs() {
    const std::vector<std::vector<std::size_t>> rows = {
        {0, 3, 4, 5},          // c1: p1 p4 p5 p6
        {0, 3, 5},             // c2: p1 p4 p6
        {2, 4, 6, 7},          // c3: p3 p5 p7 p8
        {1, 3, 4, 5},          // c4: p2 p4 p5 p6
        {1, 2, 3, 6, 7},       // c5: p2 p3 p4 p7 p8
        {1, 3, 6},             // c6: p2 p4 p7
        {0, 1, 2, 3, 6, 7},    // c7: p1 p2 p3 p4 p7 p8
        {1, 2, 4, 5, 6},       // c8: p2 p3 p5 p6 p7
        {0, 2, 4, 6},          // c9: p1 p3 p5 p7
        {0, 2, 4, 6, 7},       // c10: p1 p3 p5 p7 p8
    };
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t c = 0; c < rows.size(); ++c)
        for (std::size_t p : rows[c]) pairs.emplace_back(c, p);
    return pairs;
}

inline gram::Mmer raw_mmer() {
    gram::InformationSystem source = customers();
    gram::InformationSystem target = products();
    gram::BinaryRelation relation(source.object_count(), target.object_count(), buys_pairs());
    return gram::Mmer(std::move(source), std::move(target), std::move(relation));
}

// Age and Salary split into 4 equal-width intervals, Price into 3.
inline gram::Mmer discretized_mmer() {
    gram::Mmer raw = raw_mmer();
    gram::DiscretizerSpec source_spec;
    source_spec.entries["Age"] = {gram::DiscretizeMethod::equal_width, 4, std::nullopt};
    source_spec.entries["Salary"] = {gram::DiscretizeMethod::equal_width, 4, std::nullopt};
    gram::DiscretizerSpec target_spec;
    target_spec.entries["Price"] = {gram::DiscretizeMethod::equal_width, 3, std::nullopt};
    gram::InformationSystem source = gram::discretize_system(raw.source, source_spec).first;
    gram::InformationSystem target = gram::discretize_system(raw.target, target_spec).first;
    return gram::Mmer(std::move(source), std::move(target), raw.relation);
}

}  // namespace toy

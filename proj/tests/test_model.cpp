#include <doctest.h>

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "gram/errors.hpp"
#include "gram/model.hpp"
#include "toy_data.hpp"

using namespace gram;

namespace {

std::vector<AttributeValue> noms(std::initializer_list<const char*> labels) {
    std::vector<AttributeValue> column;
    for (const char* l : labels) column.push_back(Nominal{l});
    return column;
}

}  // namespace

TEST_CASE("information system validation") {
    CHECK_THROWS_AS(InformationSystem({"a", "a"}, {{"X", AttrKind::nominal}},
                                      {noms({"u", "v"})}),
                    DataError);
    CHECK_THROWS_AS(InformationSystem({"a", "b"},
                                      {{"X", AttrKind::nominal}, {"X", AttrKind::nominal}},
                                      {noms({"u", "v"}), noms({"u", "v"})}),
                    SchemaError);
    CHECK_THROWS_AS(InformationSystem({"a", "b"}, {{"X", AttrKind::nominal}}, {noms({"u"})}),
                    SchemaError);
    CHECK_THROWS_AS(InformationSystem({"a", "b"}, {{"X", AttrKind::nominal}},
                                      {{Nominal{"u"}, Numeric{1.0}}}),
                    TypeError);
    CHECK_THROWS_AS(InformationSystem({"a"}, {{"X", AttrKind::nominal}}, {{Numeric{1.0}}}),
                    TypeError);
    CHECK_THROWS_AS(InformationSystem({"a"}, {{"X", AttrKind::numeric}}, {{Nominal{"u"}}}),
                    TypeError);
    CHECK_THROWS_AS(InformationSystem({"a"}, {{"X", AttrKind::numeric}},
                                      {{Numeric{std::numeric_limits<double>::quiet_NaN()}}}),
                    DataError);
    CHECK_THROWS_AS(InformationSystem({"a"}, {{"X", AttrKind::numeric}},
                                      {{Interval{2.0, 1.0, false}}}),
                    DataError);
}

TEST_CASE("attribute lookup") {
    const InformationSystem is = toy::customers();
    CHECK(is.attribute_index("Gender") == 1);
    CHECK(is.attribute(3).name == "Salary");
    CHECK(is.attribute(is.attribute_index("Salary")).kind == AttrKind::numeric);
    CHECK_THROWS_AS(is.attribute_index("Nope"), SchemaError);
    CHECK_THROWS_AS(is.attribute(9), std::out_of_range);
}

TEST_CASE("blocks are equivalence classes of matching rows") {
    const InformationSystem is = toy::customers();
    const IndexSet males = block(is, {{"Gender", Nominal{"Male"}}});
    CHECK(males.count() == 6);
    CHECK(males.test(0));
    CHECK_FALSE(males.test(1));

    const IndexSet married_males =
        block(is, {{"Gender", Nominal{"Male"}}, {"Married", Nominal{"Yes"}}});
    CHECK(married_males.indices() == std::vector<std::size_t>{4, 5, 6, 9});

    const IndexSet everyone = block(is, std::span<const Descriptor>{});
    CHECK(everyone.count() == 10);

    CHECK(block(is, {{"Gender", Nominal{"Alien"}}}).empty());
    CHECK_THROWS_AS(block(is, {{"Gender", Numeric{1.0}}}), TypeError);
    const Descriptor bad{7, Nominal{"x"}};
    CHECK_THROWS_AS(block(is, std::span<const Descriptor>{&bad, 1}), SchemaError);
}

TEST_CASE("support is an exact fraction") {
    const InformationSystem is = toy::customers();
    CHECK(support(block(is, {{"Married", Nominal{"Yes"}}}), 10) == Fraction(4, 5));
    CHECK_THROWS_AS(support(IndexSet(3), 0), ParamError);
}

TEST_CASE("dropping numeric columns keeps nominal and interval ones") {
    const InformationSystem is = toy::customers();
    const InformationSystem reduced = drop_numeric_attributes(is);
    CHECK(reduced.attribute_count() == 2);
    CHECK(reduced.attribute(0).name == "Gender");
    CHECK(reduced.attribute(1).name == "Married");
    CHECK(reduced.object_count() == 10);

    const InformationSystem with_intervals(
        {"a", "b"}, {{"N", AttrKind::numeric}, {"I", AttrKind::numeric}},
        {{Numeric{1.0}, Numeric{2.0}},
         {Interval{0, 1, false}, Interval{1, 2, true}}});
    const InformationSystem reduced2 = drop_numeric_attributes(with_intervals);
    CHECK(reduced2.attribute_count() == 1);
    CHECK(reduced2.column_cell_kind(0) == CellKind::interval);
}

TEST_CASE("binary relation stores both directions and collapses duplicates") {
    const BinaryRelation rel(3, 2, {{0, 1}, {2, 0}, {0, 1}});
    CHECK(rel.pair_count() == 2);
    CHECK(rel.neighbors(0).indices() == std::vector<std::size_t>{1});
    CHECK(rel.neighbors(1).empty());
    CHECK(rel.inverse_neighbors(0).indices() == std::vector<std::size_t>{2});
    CHECK(rel.inverse_neighbors(1).indices() == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(BinaryRelation(2, 2, {{2, 0}}), std::out_of_range);
    CHECK_THROWS_AS(rel.neighbors(3), std::out_of_range);
}

TEST_CASE("toy relation matches the purchase table") {
    const Mmer mmer = toy::raw_mmer();
    CHECK(mmer.relation.pair_count() == 43);
    CHECK(mmer.relation.neighbors(0).indices() == std::vector<std::size_t>{0, 3, 4, 5});
    CHECK(mmer.relation.inverse_neighbors(7).indices() == std::vector<std::size_t>{2, 4, 6, 9});
    CHECK(mmer.relation.inverse_neighbors(0).count() == 5);
}

TEST_CASE("mmer requires matching dimensions") {
    InformationSystem src = toy::customers();
    InformationSystem tgt = toy::products();
    CHECK_THROWS_AS(Mmer(src, tgt, BinaryRelation(9, 8, {})), DataError);
    CHECK_THROWS_AS(Mmer(src, tgt, BinaryRelation(10, 7, {})), DataError);
}

TEST_CASE("granules carry sorted intensions and their extensions") {
    const InformationSystem is = toy::customers();
    const Granule g = make_granule(
        is, Side::source,
        {Descriptor{2, Nominal{"Yes"}}, Descriptor{1, Nominal{"Male"}}});
    CHECK(g.intension[0].attribute == 1);
    CHECK(g.intension[1].attribute == 2);
    CHECK(g.extension.indices() == std::vector<std::size_t>{4, 5, 6, 9});

    CHECK_THROWS_AS(make_granule(is, Side::source, {}), ParamError);
    CHECK_THROWS_AS(make_granule(is, Side::source,
                                 {Descriptor{1, Nominal{"Male"}}, Descriptor{1, Nominal{"Male"}}}),
                    ParamError);
}

TEST_CASE("value ordering and rendering") {
    CHECK(value_less(Nominal{"A"}, Nominal{"B"}));
    CHECK(value_less(Numeric{1.0}, Numeric{2.0}));
    CHECK(value_less(Interval{0, 1, false}, Interval{0, 2, false}));
    CHECK(value_less(Interval{0, 1, false}, Interval{1, 2, false}));
    CHECK_THROWS_AS(value_less(Nominal{"A"}, Numeric{1.0}), TypeError);

    CHECK(value_to_string(Nominal{"Male"}) == "Male");
    CHECK(value_to_string(Numeric{2.5}) == "2.5");
    CHECK(value_to_string(Interval{2, 7.5, false}) == "[2,7.5)");
    CHECK(value_to_string(Interval{2, 7.5, true}) == "[2,7.5]");

    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(18.0) == "18");
    const double third = 22.0 / 3.0;
    CHECK(std::stod(format_double(third)) == third);
}

TEST_CASE("intension text form") {
    const InformationSystem is = toy::customers();
    const std::vector<Descriptor> desc = {Descriptor{1, Nominal{"Male"}},
                                          Descriptor{2, Nominal{"Yes"}}};
    CHECK(intension_to_string(is, desc) == "(Gender: Male) & (Married: Yes)");
}

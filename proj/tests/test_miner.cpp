#include <doctest.h>

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gram/errors.hpp"
#include "gram/miner.hpp"
#include "oracle.hpp"
#include "random_mmer.hpp"
#include "toy_data.hpp"

using namespace gram;

namespace {

std::vector<Descriptor> descriptors(
    const InformationSystem& is,
    const std::vector<std::pair<std::string, AttributeValue>>& spec) {
    std::vector<Descriptor> out;
    for (const auto& [name, value] : spec) out.push_back({is.attribute_index(name), value});
    std::sort(out.begin(), out.end(), oracle::descriptor_less);
    return out;
}

bool contains_intension(const std::vector<Granule>& granules,
                        const std::vector<Descriptor>& intension) {
    return std::any_of(granules.begin(), granules.end(), [&](const Granule& g) {
        return oracle::intension_same(g.intension, intension);
    });
}

oracle::Rat rat(const Fraction& f) { return {f.num(), f.den()}; }

void check_measures_match(const RuleMeasures& got, const oracle::Measures& expected) {
    REQUIRE(oracle::rat_eq(rat(got.scoverage), expected.scoverage));
    REQUIRE(oracle::rat_eq(rat(got.tcoverage), expected.tcoverage));
    REQUIRE(oracle::rat_eq(rat(got.sconfidence), expected.sconfidence));
    REQUIRE(oracle::rat_eq(rat(got.tconfidence), expected.tconfidence));
    REQUIRE(got.min_common_targets == expected.reached);
}

// mine() against the unpruned brute-force enumeration, as an exact set.
void check_against_oracle(const InformationSystem& source, const InformationSystem& target,
                          const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                          const Thresholds& t) {
    const Mmer m(source, target, BinaryRelation(source.object_count(), target.object_count(), pairs));
    const auto dense = oracle::dense_relation(source.object_count(), target.object_count(), pairs);
    const std::vector<oracle::Rule> expected =
        oracle::mine(source, target, dense, {rat(t.ms), rat(t.mt), rat(t.mc), rat(t.tc)});

    const MiningResult got = mine(m, t);
    REQUIRE(got.rules.size() == expected.size());

    std::vector<const GranularRule*> in_oracle_order;
    for (const GranularRule& r : got.rules) in_oracle_order.push_back(&r);
    std::sort(in_oracle_order.begin(), in_oracle_order.end(),
              [](const GranularRule* a, const GranularRule* b) {
                  if (!oracle::intension_same(a->lhs.intension, b->lhs.intension))
                      return oracle::intension_less(a->lhs.intension, b->lhs.intension);
                  return oracle::intension_less(a->rhs.intension, b->rhs.intension);
              });
    for (std::size_t i = 0; i < expected.size(); ++i) {
        REQUIRE(oracle::intension_same(in_oracle_order[i]->lhs.intension, expected[i].lhs));
        REQUIRE(oracle::intension_same(in_oracle_order[i]->rhs.intension, expected[i].rhs));
        check_measures_match(in_oracle_order[i]->measures, expected[i].measures);
    }
}

}  // namespace

TEST_CASE("toy source candidates at 0.3 coverage") {
    const Mmer m = toy::discretized_mmer();
    const std::vector<Granule> source =
        enumerate_granules(m.source, Side::source, Fraction(3, 10));
    CHECK(source.size() == 11);

    const std::size_t age = m.source.attribute_index("Age");
    const std::size_t salary = m.source.attribute_index("Salary");
    const AttributeValue oldest = m.source.cell(5, age);        // [35, 40]
    const AttributeValue lowest = m.source.cell(0, salary);     // [2000, 2900)
    const AttributeValue middle = m.source.cell(2, salary);     // [2900, 3800)
    const AttributeValue highest = m.source.cell(4, salary);    // [4700, 5600]
    const AttributeValue male = Nominal{"Male"};
    const AttributeValue female = Nominal{"Female"};
    const AttributeValue married = Nominal{"Yes"};

    const auto present = [&](const std::vector<std::pair<std::string, AttributeValue>>& spec) {
        return contains_intension(source, descriptors(m.source, spec));
    };
    CHECK(present({{"Age", oldest}}));
    CHECK(present({{"Gender", male}}));
    CHECK(present({{"Gender", female}}));
    CHECK(present({{"Married", married}}));
    CHECK(present({{"Salary", lowest}}));
    CHECK(present({{"Salary", middle}}));
    CHECK(present({{"Salary", highest}}));
    CHECK(present({{"Age", oldest}, {"Married", married}}));
    CHECK(present({{"Gender", male}, {"Married", married}}));
    CHECK(present({{"Gender", female}, {"Married", married}}));
    CHECK(present({{"Married", married}, {"Salary", highest}}));

    CHECK_FALSE(present({{"Age", m.source.cell(0, age)}}));  // only 2 in [20, 25)
    CHECK_FALSE(present({{"Married", Nominal{"No"}}}));
    CHECK_FALSE(present({{"Gender", male}, {"Salary", highest}}));

    for (const Granule& g : source) {
        CHECK(g.side == Side::source);
        CHECK(std::is_sorted(g.intension.begin(), g.intension.end(),
                             [](const Descriptor& a, const Descriptor& b) {
                                 return a.attribute < b.attribute;
                             }));
        const std::vector<std::size_t> expected = oracle::block(m.source, g.intension);
        CHECK(g.extension.indices() == expected);
        CHECK(oracle::rat_ge(static_cast<std::int64_t>(expected.size()), 10, {3, 10}));
    }
}

TEST_CASE("toy target candidates at 0.3 coverage") {
    const Mmer m = toy::discretized_mmer();
    const std::vector<Granule> target =
        enumerate_granules(m.target, Side::target, Fraction(3, 10));
    CHECK(target.size() == 6);

    const std::size_t price = m.target.attribute_index("Price");
    const AttributeValue cheapest = m.target.cell(0, price);  // [2, 22/3)
    const auto present = [&](const std::vector<std::pair<std::string, AttributeValue>>& spec) {
        return contains_intension(target, descriptors(m.target, spec));
    };
    CHECK(present({{"Country", Nominal{"China"}}}));
    CHECK(present({{"Category", Nominal{"Alcohol"}}}));
    CHECK(present({{"Color", Nominal{"Yellow"}}}));
    CHECK(present({{"Price", cheapest}}));
    CHECK(present({{"Country", Nominal{"China"}}, {"Price", cheapest}}));
    CHECK(present({{"Color", Nominal{"Yellow"}}, {"Price", cheapest}}));

    CHECK_FALSE(present({{"Country", Nominal{"France"}}}));
    CHECK_FALSE(present({{"Category", Nominal{"Staple"}}}));
    CHECK_FALSE(present({{"Country", Nominal{"China"}}, {"Category", Nominal{"Alcohol"}}}));
}

TEST_CASE("enumeration rejects numeric columns and zero coverage") {
    const Mmer raw = toy::raw_mmer();
    CHECK_THROWS_AS(enumerate_granules(raw.source, Side::source, Fraction(3, 10)), ParamError);
    const Mmer m = toy::discretized_mmer();
    CHECK_THROWS_AS(enumerate_granules(m.source, Side::source, Fraction(0, 1)), ParamError);
    CHECK_THROWS_AS(mine(raw, Thresholds::checked({3, 10}, {3, 10}, {3, 5}, {3, 5})), ParamError);
}

TEST_CASE("enumeration matches the unpruned oracle on random systems") {
    std::mt19937 rng(40917);
    for (int trial = 0; trial < 20; ++trial) {
        const testgen::RandomMmer rm = testgen::random_mmer(rng);
        const Fraction min_coverage = testgen::random_threshold(rng);
        const std::vector<Granule> got =
            enumerate_granules(rm.source, Side::source, min_coverage);
        std::vector<std::vector<Descriptor>> got_intensions;
        for (const Granule& g : got) got_intensions.push_back(g.intension);
        std::vector<std::vector<Descriptor>> expected =
            oracle::enumerate_intensions(rm.source, rat(min_coverage));

        REQUIRE(got_intensions.size() == expected.size());
        std::sort(got_intensions.begin(), got_intensions.end(), oracle::intension_less);
        std::sort(expected.begin(), expected.end(), oracle::intension_less);
        for (std::size_t i = 0; i < expected.size(); ++i)
            REQUIRE(oracle::intension_same(got_intensions[i], expected[i]));

        for (const Granule& g : got)
            REQUIRE(g.extension.indices() == oracle::block(rm.source, g.intension));
    }
}

TEST_CASE("mining matches the brute-force oracle on random systems") {
    std::mt19937 rng(52618);
    for (int trial = 0; trial < 15; ++trial) {
        const testgen::RandomMmer rm = testgen::random_mmer(rng);
        check_against_oracle(rm.source, rm.target, rm.pairs, testgen::random_thresholds(rng));
    }
}

TEST_CASE("toy mining matches the oracle and keeps the landmark rules") {
    const Mmer m = toy::discretized_mmer();
    const Thresholds t = Thresholds::checked({3, 10}, {3, 10}, {3, 5}, {3, 5});

    std::vector<std::pair<std::size_t, std::size_t>> pairs = toy::buys_pairs();
    check_against_oracle(m.source, m.target, pairs, t);

    const MiningResult result = mine(m, t);
    CHECK(result.rules.size() == 40);
    const CountSummary summary = count_summary(result);
    CHECK(summary.source_candidates == 11);
    CHECK(summary.target_candidates == 6);
    CHECK(summary.evaluated_pairs == 66);
    CHECK(summary.rules == 40);

    const std::size_t salary = m.source.attribute_index("Salary");
    const std::size_t price = m.target.attribute_index("Price");
    const auto find_rule = [&](const std::vector<Descriptor>& lhs,
                               const std::vector<Descriptor>& rhs) -> const GranularRule* {
        for (const GranularRule& r : result.rules)
            if (oracle::intension_same(r.lhs.intension, lhs) &&
                oracle::intension_same(r.rhs.intension, rhs))
                return &r;
        return nullptr;
    };

    const GranularRule* male_alcohol =
        find_rule(descriptors(m.source, {{"Gender", Nominal{"Male"}}}),
                  descriptors(m.target, {{"Category", Nominal{"Alcohol"}}}));
    REQUIRE(male_alcohol != nullptr);
    CHECK(male_alcohol->measures.scoverage == Fraction(3, 5));
    CHECK(male_alcohol->measures.tcoverage == Fraction(3, 8));
    CHECK(male_alcohol->measures.sconfidence == Fraction(2, 3));
    CHECK(male_alcohol->measures.tconfidence == Fraction(2, 3));

    const GranularRule* married_china_cheap = find_rule(
        descriptors(m.source,
                    {{"Married", Nominal{"Yes"}}, {"Salary", m.source.cell(4, salary)}}),
        descriptors(m.target,
                    {{"Country", Nominal{"China"}}, {"Price", m.target.cell(0, price)}}));
    REQUIRE(married_china_cheap != nullptr);
    CHECK(married_china_cheap->measures.scoverage == Fraction(3, 10));
    CHECK(married_china_cheap->measures.tcoverage == Fraction(3, 8));
    CHECK(married_china_cheap->measures.sconfidence == Fraction(2, 3));
    CHECK(married_china_cheap->measures.tconfidence == Fraction(2, 3));
}

TEST_CASE("rules come out strictly sorted in canonical order") {
    const Mmer m = toy::discretized_mmer();
    const MiningResult result = mine(m, Thresholds::checked({1, 10}, {1, 10}, {2, 5}, {2, 5}));
    REQUIRE(result.rules.size() > 1);
    for (std::size_t i = 1; i < result.rules.size(); ++i) {
        CHECK(rule_less(result.rules[i - 1], result.rules[i]));
        CHECK_FALSE(rule_less(result.rules[i], result.rules[i - 1]));
    }
}

TEST_CASE("parallel and serial mining agree exactly") {
    std::mt19937 rng(90321);
    for (int trial = 0; trial < 30; ++trial) {
        const testgen::RandomMmer rm = testgen::random_mmer(rng);
        const Mmer m = rm.mmer();
        const Thresholds t = testgen::random_thresholds(rng);
        const MiningResult serial = mine_serial(m, t);
        for (int threads : {1, 2, 4}) {
            const MiningResult parallel = mine(m, t, threads);
            REQUIRE(parallel.rules.size() == serial.rules.size());
            CHECK(parallel.source_candidates == serial.source_candidates);
            CHECK(parallel.target_candidates == serial.target_candidates);
            CHECK(parallel.rank_clamp_count == serial.rank_clamp_count);
            for (std::size_t i = 0; i < serial.rules.size(); ++i) {
                const GranularRule& a = serial.rules[i];
                const GranularRule& b = parallel.rules[i];
                REQUIRE(oracle::intension_same(a.lhs.intension, b.lhs.intension));
                REQUIRE(oracle::intension_same(a.rhs.intension, b.rhs.intension));
                CHECK(a.lhs.extension == b.lhs.extension);
                CHECK(a.rhs.extension == b.rhs.extension);
                CHECK(a.measures.scoverage == b.measures.scoverage);
                CHECK(a.measures.tcoverage == b.measures.tcoverage);
                CHECK(a.measures.sconfidence == b.measures.sconfidence);
                CHECK(a.measures.tconfidence == b.measures.tconfidence);
                CHECK(a.measures.min_common_targets == b.measures.min_common_targets);
            }
        }
    }
}

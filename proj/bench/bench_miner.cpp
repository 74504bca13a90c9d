// Compares the OpenMP mining kernel against the serial reference on a
// synthetic two-table system sized so the candidate grid dominates the run.
#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gram/measures.hpp"
#include "gram/miner.hpp"
#include "gram/model.hpp"

namespace {

using namespace gram;

InformationSystem synthetic_system(std::mt19937& rng, std::size_t objects,
                                   std::size_t interval_attrs, std::size_t nominal_attrs,
                                   const char* id_prefix) {
    std::vector<std::string> ids;
    ids.reserve(objects);
    for (std::size_t i = 0; i < objects; ++i) ids.push_back(id_prefix + std::to_string(i));

    std::vector<Attribute> attributes;
    std::vector<std::vector<AttributeValue>> columns;
    std::size_t attr = 0;
    for (std::size_t j = 0; j < interval_attrs; ++j, ++attr) {
        attributes.push_back({"num" + std::to_string(j), AttrKind::numeric});
        const std::size_t buckets = 4 + j % 3;
        std::vector<AttributeValue> column;
        column.reserve(objects);
        // skewed bucket choice so block sizes spread across the coverage range
        std::geometric_distribution<std::size_t> pick(0.35);
        for (std::size_t i = 0; i < objects; ++i) {
            const std::size_t b = std::min(pick(rng), buckets - 1);
            column.push_back(Interval{static_cast<double>(10 * b),
                                      static_cast<double>(10 * (b + 1)),
                                      b + 1 == buckets});
        }
        columns.push_back(std::move(column));
    }
    for (std::size_t j = 0; j < nominal_attrs; ++j, ++attr) {
        attributes.push_back({"cat" + std::to_string(j), AttrKind::nominal});
        const std::size_t labels = 3 + j % 4;
        std::vector<AttributeValue> column;
        column.reserve(objects);
        std::geometric_distribution<std::size_t> pick(0.4);
        for (std::size_t i = 0; i < objects; ++i)
            column.push_back(Nominal{"l" + std::to_string(std::min(pick(rng), labels - 1))});
        columns.push_back(std::move(column));
    }
    return InformationSystem(std::move(ids), std::move(attributes), std::move(columns));
}

Mmer synthetic_mmer(std::size_t sources, std::size_t targets, double density) {
    std::mt19937 rng(20240315);
    InformationSystem source = synthetic_system(rng, sources, 2, 3, "s");
    InformationSystem target = synthetic_system(rng, targets, 2, 2, "t");
    std::bernoulli_distribution flip(density);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < sources; ++i)
        for (std::size_t j = 0; j < targets; ++j)
            if (flip(rng)) pairs.emplace_back(i, j);
    return Mmer(std::move(source), std::move(target),
                BinaryRelation(sources, targets, pairs));
}

const Mmer& shared_mmer() {
    static const Mmer mmer = synthetic_mmer(800, 1200, 0.04);
    return mmer;
}

Thresholds bench_thresholds() {
    return Thresholds::checked({1, 20}, {1, 20}, {1, 10}, {1, 25});
}

void BM_mine_parallel(benchmark::State& state) {
    const Mmer& mmer = shared_mmer();
    const Thresholds t = bench_thresholds();
    const int threads = static_cast<int>(state.range(0));
    std::size_t rules = 0;
    for (auto _ : state) {
        MiningResult result = mine(mmer, t, threads);
        rules = result.rules.size();
        benchmark::DoNotOptimize(result);
    }
    state.counters["rules"] = static_cast<double>(rules);
}

void BM_mine_serial(benchmark::State& state) {
    const Mmer& mmer = shared_mmer();
    const Thresholds t = bench_thresholds();
    std::size_t rules = 0;
    for (auto _ : state) {
        MiningResult result = mine_serial(mmer, t);
        rules = result.rules.size();
        benchmark::DoNotOptimize(result);
    }
    state.counters["rules"] = static_cast<double>(rules);
}

void BM_enumerate_granules(benchmark::State& state) {
    const Mmer& mmer = shared_mmer();
    for (auto _ : state) {
        std::vector<Granule> granules =
            enumerate_granules(mmer.source, Side::source, Fraction(1, 20));
        benchmark::DoNotOptimize(granules);
    }
}

BENCHMARK(BM_mine_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mine_parallel)->Arg(2)->Arg(4)->Arg(8)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_granules)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <numeric>
#include <optional>

#include "sumcont/bipartite.hpp"
#include "sumcont/census.hpp"
#include "sumcont/pipeline.hpp"
#include "sumcont/rng.hpp"
#include "sumcont/structure.hpp"
#include "sumcont/tripartite.hpp"

using namespace sumcont;

namespace {

GroundSet interval(int n) {
    std::vector<std::int64_t> vals(static_cast<std::size_t>(n));
    std::iota(vals.begin(), vals.end(), 1);
    return GroundSet::build(GroupSpec::integers(), vals);
}

IndexSet random_subset(const GroundSet& gs, CounterRng& rng, double density) {
    IndexSet s = gs.empty_set(Universe::Ground);
    for (int i = 0; i < gs.size(); ++i)
        if (rng.next_uniform01() < density) s.set(i);
    if (s.empty()) s.set(0);
    return s;
}

void BM_Sumset(benchmark::State& state) {
    GroundSet gs = interval(static_cast<int>(state.range(0)));
    CounterRng rng(1);
    IndexSet a = random_subset(gs, rng, 0.5);
    IndexSet b = random_subset(gs, rng, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(gs.sumset(a, b));
}
BENCHMARK(BM_Sumset)->Arg(16)->Arg(32)->Arg(64);

void BM_CensusSymmetric(benchmark::State& state) {
    GroundSet gs = interval(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        FamilyCensus c = census_symmetric(gs, 9, 4);
        benchmark::DoNotOptimize(c.count);
    }
}
BENCHMARK(BM_CensusSymmetric)->Arg(12)->Arg(16)->Arg(20);

void BM_BoundedPairEnumeration(benchmark::State& state) {
    GroundSet gs = interval(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::int64_t members = 0;
        for_each_bounded_pair(gs, 8, 3, 3,
                              [&](const IndexSet&, const IndexSet&) { ++members; });
        benchmark::DoNotOptimize(members);
    }
}
BENCHMARK(BM_BoundedPairEnumeration)->Arg(10)->Arg(12)->Arg(14);

void BM_SumriseRun(benchmark::State& state) {
    GroundSet gs = interval(static_cast<int>(state.range(0)));
    IndexSet a = gs.empty_set(Universe::Ground);
    for (int i = 0; i < 6; ++i) a.set(i);
    IndexSet f = gs.empty_set(Universe::Ground);
    for (int i = 0; i < 4; ++i) f.set(i);
    SumriseOptions opts;
    opts.record_trace = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(sumrise(gs, 3, a, f, gs.full_set(Universe::Sum),
                                         gs.full_set(Universe::Ground), opts));
}
BENCHMARK(BM_SumriseRun)->Arg(16)->Arg(32)->Arg(64);

void BM_SunsetRun(benchmark::State& state) {
    GroundSet gs = interval(static_cast<int>(state.range(0)));
    IndexSet a = gs.empty_set(Universe::Ground);
    for (int i = 0; i < 6; ++i) a.set(i);
    SunsetOptions opts;
    opts.record_trace = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(sunset(gs, Threshold::rational(1, 25), 3, 3, a, a,
                                        gs.full_set(Universe::Sum),
                                        gs.full_set(Universe::Ground),
                                        gs.full_set(Universe::Ground), opts));
}
BENCHMARK(BM_SunsetRun)->Arg(16)->Arg(32);

void BM_ContainerSequence(benchmark::State& state) {
    GroundSet gs = interval(static_cast<int>(state.range(0)));
    IndexSet a = gs.empty_set(Universe::Ground);
    for (int i = 0; i < 4; ++i) a.set(i);
    EpsilonSpec eps = EpsilonSpec::rational(1, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_container_sequence(gs, a, a, 9, eps, false));
}
BENCHMARK(BM_ContainerSequence)->Arg(12)->Arg(14);

void BM_ApCoverSearch(benchmark::State& state) {
    CounterRng rng(9);
    std::vector<std::int64_t> a;
    for (int i = 0; i < state.range(0); ++i)
        a.push_back(1 + static_cast<std::int64_t>(rng.next_below(500)));
    for (auto _ : state) benchmark::DoNotOptimize(ap_cover_search(a, 60));
}
BENCHMARK(BM_ApCoverSearch)->Arg(20)->Arg(60);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "strata/blowup.hpp"
#include "strata/corpus.hpp"
#include "strata/hironaka.hpp"
#include "strata/nodal.hpp"
#include "strata/parity.hpp"
#include "strata/pi1.hpp"
#include "strata/random.hpp"

using namespace strata;

static void BM_RandomBlowupSequence(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto trace = random_sequence(3, n, seed++);
        benchmark::DoNotOptimize(trace.final_structure().strata().size());
    }
}
BENCHMARK(BM_RandomBlowupSequence)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_SimplyConnectedVerdict(benchmark::State& state) {
    const auto s = random_sequence(3, static_cast<int>(state.range(0)), 11).final_structure();
    for (auto _ : state) {
        auto v = simply_connected_verdict(s);
        benchmark::DoNotOptimize(v.status);
    }
    state.counters["strata"] = static_cast<double>(s.strata().size());
}
BENCHMARK(BM_SimplyConnectedVerdict)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_ComponentsByParity(benchmark::State& state) {
    CorpusOptions options;
    options.max_blowups = static_cast<int>(state.range(0));
    const auto inst = make_corpus_instance(instance_seed(5, 0), options);
    for (auto _ : state) {
        auto r = components_by_parity(inst.model.structure, inst.model.nodal);
        benchmark::DoNotOptimize(r.components.size());
    }
}
BENCHMARK(BM_ComponentsByParity)->Arg(8)->Arg(16)->Arg(32);

static void BM_ComponentsBySearch(benchmark::State& state) {
    CorpusOptions options;
    options.max_blowups = static_cast<int>(state.range(0));
    const auto inst = make_corpus_instance(instance_seed(5, 0), options);
    for (auto _ : state) {
        auto sep = separating_blocks(inst.model.structure, inst.model.nodal);
        benchmark::DoNotOptimize(components_by_search(sep.residual).size());
    }
}
BENCHMARK(BM_ComponentsBySearch)->Arg(8)->Arg(16)->Arg(32);

static void BM_TSequence(benchmark::State& state) {
    Rng rng(3);
    CovectorSpace u{3, 3, {}};
    for (int r = 0; r < 2; ++r) {
        std::vector<Rational> row;
        for (int c = 0; c < 3; ++c) row.emplace_back(rng.between(-5, 5), rng.between(1, 4));
        u.rows.push_back(row);
    }
    for (auto _ : state) {
        auto t = t_sequence(u);
        benchmark::DoNotOptimize(t.values.size());
    }
}
BENCHMARK(BM_TSequence);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "bimlab/equivalence.hpp"
#include "bimlab/instances.hpp"
#include "bimlab/tx2bm.hpp"

namespace {

using namespace bimlab;

void BM_GenericConstruction(benchmark::State& state) {
    const InstanceParams p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const Transducer t = prepared_instance(p);
    for (auto _ : state) benchmark::DoNotOptimize(to_bimachine(t));
    const Bimachine b = to_bimachine(t);
    state.counters["states"] = static_cast<double>(b.total_states());
}
BENCHMARK(BM_GenericConstruction)->Args({2, 1})->Args({2, 2})->Args({2, 3})->Args({3, 2})->Args({3, 3});

void BM_HandcraftedConstruction(benchmark::State& state) {
    const InstanceParams p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(handcrafted_bimachine(p));
    state.counters["states"] = static_cast<double>(handcrafted_bimachine(p).total_states());
}
BENCHMARK(BM_HandcraftedConstruction)->Args({2, 2})->Args({2, 4})->Args({3, 2})->Args({3, 4});

void BM_Reduce(benchmark::State& state) {
    const InstanceParams p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const Bimachine b = to_bimachine(prepared_instance(p));
    for (auto _ : state) benchmark::DoNotOptimize(reduce(b));
}
BENCHMARK(BM_Reduce)->Args({2, 3})->Args({3, 3});

void BM_CheckFunctional(benchmark::State& state) {
    const InstanceParams p(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    const Transducer t = prepared_instance(p);
    for (auto _ : state) benchmark::DoNotOptimize(check_functional(t));
}
BENCHMARK(BM_CheckFunctional)->Args({2, 2})->Args({3, 3})->Args({3, 4});

void BM_Evaluate(benchmark::State& state) {
    const InstanceParams p(3, 3);
    const Bimachine b = handcrafted_bimachine(p);
    const Transducer t = prepared_instance(p);
    auto sampler = instance_sampler(p, static_cast<std::size_t>(state.range(0)));
    std::mt19937_64 rng(1);
    std::vector<Word> words;
    for (int i = 0; i < 256; ++i) words.push_back(sampler(rng));
    std::size_t i = 0;
    for (auto _ : state) {
        const Word& w = words[i++ % words.size()];
        if (state.range(1) == 0) {
            benchmark::DoNotOptimize(evaluate(b, w));
        } else {
            benchmark::DoNotOptimize(evaluate_function(t, w));
        }
    }
    state.SetLabel(state.range(1) == 0 ? "bimachine" : "transducer");
}
BENCHMARK(BM_Evaluate)->Args({16, 0})->Args({16, 1})->Args({64, 0})->Args({64, 1});

}  // namespace

BENCHMARK_MAIN();

// Serial reference vs OpenMP batch evaluation, plus the exact kernels the
// batch spends its time in.

#include <benchmark/benchmark.h>

#include <random>

#include "ribbon/batch.hpp"
#include "ribbon/exactla.hpp"
#include "support/generators.hpp"

namespace {

std::vector<ribbon::KnotRecord> make_corpus(std::size_t n) {
    ribbon::testing::Rng rng(2024);
    std::vector<ribbon::KnotRecord> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i].name = "k" + std::to_string(i);
        if (i % 2)
            out[i].seifert = ribbon::testing::random_valid_seifert(rng, 8);
        else
            out[i].braid = ribbon::testing::random_knot_braid(rng, 5, 14);
    }
    return out;
}

void BM_BatchSerial(benchmark::State& state) {
    const auto corpus = make_corpus(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ribbon::evaluate_batch(corpus, ribbon::Execution::Serial));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
    const auto corpus = make_corpus(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ribbon::evaluate_batch(corpus, ribbon::Execution::Parallel));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Signature(benchmark::State& state) {
    ribbon::testing::Rng rng(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto q = ribbon::testing::random_symmetric(rng, n, -9, 9);
    for (auto _ : state) benchmark::DoNotOptimize(ribbon::signature(q));
}

void BM_SmithNormalForm(benchmark::State& state) {
    ribbon::testing::Rng rng(11);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = ribbon::testing::random_matrix(rng, n, n, -50, 50);
    for (auto _ : state) benchmark::DoNotOptimize(ribbon::smith_normal_form(m));
}

} // namespace

BENCHMARK(BM_BatchSerial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Signature)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8);

BENCHMARK_MAIN();

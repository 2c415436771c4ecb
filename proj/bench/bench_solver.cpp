#include <benchmark/benchmark.h>

#include <random>

#include "colour_lab/solver.hpp"

using namespace colour_lab;

namespace {

SolveParams params(Kind kind, int k, int threads) {
    SolveParams p;
    p.kind = kind;
    p.k = k;
    p.threads = threads;
    p.budget = Budget{};
    return p;
}

// Unsat for star k = 5, so decide explores the full tree.
Graph five_regular() {
    std::mt19937_64 rng(7);
    return random_regular(20, 5, rng);
}

void BM_DecideSerial(benchmark::State& st) {
    const Graph g = five_regular();
    for (auto _ : st) benchmark::DoNotOptimize(decide_serial(g, params(Kind::star, 5, 1)).nodes);
}

void BM_DecideParallel(benchmark::State& st) {
    const Graph g = five_regular();
    const int threads = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(decide(g, params(Kind::star, 5, threads)).nodes);
}

void BM_EnumerateSerial(benchmark::State& st) {
    const Graph g = hypercube(3);
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate_serial(g, params(Kind::rs, 5, 1), [](const Colouring&) { return true; }).count);
}

void BM_EnumerateParallel(benchmark::State& st) {
    const Graph g = hypercube(3);
    const int threads = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate(g, params(Kind::rs, 5, threads), [](const Colouring&) { return true; }).count);
}

}  // namespace

BENCHMARK(BM_DecideSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecideParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

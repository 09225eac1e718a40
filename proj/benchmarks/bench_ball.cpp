#include <benchmark/benchmark.h>

#include "endgraph/ball.hpp"
#include "endgraph/builtins.hpp"
#include "endgraph/closed_set.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/reductions.hpp"

using namespace endgraph;

static void BM_ball_tree3(benchmark::State& state) {
    const auto g = builtins::regular_tree(3);
    const HalfRadius r = HalfRadius::whole(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ball(*g, r));
}
BENCHMARK(BM_ball_tree3)->DenseRange(4, 10, 2);

static void BM_canonical_code_gamma3(benchmark::State& state) {
    const Ball b = ball(*gamma_3(ClosedSetSpec::full()), HalfRadius::whole(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(b));
}
BENCHMARK(BM_canonical_code_gamma3)->DenseRange(2, 8, 2);

static void BM_component_tree_gamma3(benchmark::State& state) {
    const auto g = gamma_3(ClosedSetSpec::full());
    for (auto _ : state) benchmark::DoNotOptimize(component_tree(*g, state.range(0), state.range(0) + 1));
}
BENCHMARK(BM_component_tree_gamma3)->DenseRange(4, 10, 2);
BENCHMARK_MAIN();

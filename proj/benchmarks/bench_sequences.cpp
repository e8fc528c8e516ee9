#include "qsr/sequences.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qsr;

void BM_pair_prob_frozen(benchmark::State& state) {
    StateSequence seq = frozen_prefix_seq(bits_zero(), FrozenTail::plain_superposition);
    const int n = static_cast<int>(state.range(0));
    seq.at(n);  // warm the cache
    for (auto _ : state)
        benchmark::DoNotOptimize(pair_prob(seq, seq, n, n, Accuracy(4)));
}
BENCHMARK(BM_pair_prob_frozen)->Arg(8)->Arg(32);

void BM_pair_prob_gaussian(benchmark::State& state) {
    GaussianParams params;
    params.center = bits_zero();
    params.sigma = parse_compact("1+").re;
    StateSequence seq = gaussian_seq(params);
    const int n = static_cast<int>(state.range(0));
    seq.at(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(pair_prob(seq, seq, n, n, Accuracy(4)));
}
BENCHMARK(BM_pair_prob_gaussian)->Arg(16)->Arg(40);

void BM_gaussian_element(benchmark::State& state) {
    GaussianParams params;
    params.center = bits_zero();
    params.sigma = parse_compact("1+").re;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        StateSequence seq = gaussian_seq(params);  // fresh cache each round
        benchmark::DoNotOptimize(seq.at(n));
    }
}
BENCHMARK(BM_gaussian_element)->Arg(16)->Arg(40);

void BM_cauchy_check_frozen(benchmark::State& state) {
    StateSequence seq = frozen_prefix_seq(bits_zero(), FrozenTail::plain_superposition);
    const Horizon hz{8, 32, 8};
    for (auto _ : state) benchmark::DoNotOptimize(cauchy_check(seq, hz));
}
BENCHMARK(BM_cauchy_check_frozen);

}  // namespace

BENCHMARK_MAIN();

#include "qsr/arithmetic.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

using namespace qsr;

std::vector<StringState> random_states(int count, int max_width, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> width_dist(1, max_width);
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<StringState> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        auto component = [&] {
            const int w = width_dist(rng);
            std::uniform_int_distribution<int> lo_dist(-(w - 1), 0);
            DigitString d;
            d.lo = lo_dist(rng);
            d.hi = d.lo + w - 1;
            d.bits.resize(static_cast<std::size_t>(w));
            for (auto& b : d.bits) b = static_cast<std::uint8_t>(bit(rng));
            return RealComponent{bit(rng) ? Sign::plus : Sign::minus, d};
        };
        out.push_back(make_state(component(), component()));
    }
    return out;
}

void BM_add(benchmark::State& state) {
    auto xs = random_states(256, static_cast<int>(state.range(0)), 1);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(add_A(xs[i % 256], xs[(i + 1) % 256]));
        ++i;
    }
}
BENCHMARK(BM_add)->Arg(8)->Arg(24)->Arg(64);

void BM_mul(benchmark::State& state) {
    auto xs = random_states(256, static_cast<int>(state.range(0)), 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul_A(xs[i % 256], xs[(i + 1) % 256]));
        ++i;
    }
}
BENCHMARK(BM_mul)->Arg(8)->Arg(24)->Arg(64);

void BM_ell_inverse(benchmark::State& state) {
    const RealComponent five = parse_compact("101+").re;
    const Accuracy acc(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ell_inverse(five, acc));
}
BENCHMARK(BM_ell_inverse)->Arg(7)->Arg(16)->Arg(32);

void BM_eigenvalue(benchmark::State& state) {
    auto xs = random_states(256, 32, 3);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenvalue(xs[i % 256]));
        ++i;
    }
}
BENCHMARK(BM_eigenvalue);

}  // namespace

#include "alpwave/filterbank.hpp"
#include "alpwave/hypergeom.hpp"
#include "alpwave/transform.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace alpwave;

void BM_FilterMatrix(benchmark::State& state) {
    const long n = state.range(0);
    const auto method = static_cast<D1Method>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(d1_matrix(n, method));
}
BENCHMARK(BM_FilterMatrix)
    ->ArgsProduct({{2, 6, 10}, {0, 1, 2, 3}})
    ->ArgNames({"n", "method"});

template <class S>
BasicSignal<S> random_signal(long n, long levels);

template <>
SignalF random_signal<double>(long n, long levels) {
    std::mt19937 rng(1234);
    std::uniform_real_distribution<double> real(-1, 1);
    SignalF sig;
    sig.n = n;
    sig.levels = levels;
    sig.cells.resize(1L << levels);
    for (auto& cell : sig.cells) {
        cell.resize(n + 1);
        for (auto& v : cell) v = real(rng);
    }
    return sig;
}

template <>
Signal random_signal<SurdSum>(long n, long levels) {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> num(-9, 9);
    Signal sig;
    sig.n = n;
    sig.levels = levels;
    sig.cells.resize(1L << levels);
    for (auto& cell : sig.cells) {
        cell.resize(n + 1);
        for (auto& v : cell) v = SurdSum(ExactScalar(Rational(num(rng), 7), 3));
    }
    return sig;
}

template <class S>
void BM_Analyze(benchmark::State& state) {
    const auto sig = random_signal<S>(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(analyze(sig));
}
BENCHMARK(BM_Analyze<double>)->Args({4, 8})->Args({8, 10})->ArgNames({"n", "K"});
BENCHMARK(BM_Analyze<SurdSum>)->Args({4, 6})->ArgNames({"n", "K"});

void BM_TruncatedSeries(benchmark::State& state) {
    const double theta = static_cast<double>(state.range(0));
    // parameters of the n = 4, j = 1 transform series
    const std::vector<double> num = {3.5, 4.0};
    const std::vector<double> den = {2.5, 6.5, 6.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(eval_pfq_truncated(num, den, -theta * theta / 4, 1e-12));
}
BENCHMARK(BM_TruncatedSeries)->Arg(1)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();

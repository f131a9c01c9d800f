#include <benchmark/benchmark.h>

#include "cantorcert/builder.hpp"
#include "cantorcert/polyenum.hpp"
#include "cantorcert/ternary.hpp"
#include "cantorcert/vonneumann.hpp"

using namespace cantorcert;

static void BM_EnumeratePrefix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (long m = 1; m <= 100; ++m)
            benchmark::DoNotOptimize(polyenum::enumerate(n, Integer(m)));
    }
}
BENCHMARK(BM_EnumeratePrefix)->Arg(1)->Arg(2)->Arg(3);

static void BM_IntervalEnclosure(benchmark::State& state) {
    const auto p = polyenum::enumerate(2, Integer(30));
    const Box box({RationalInterval(Rational(1, 108), Rational(1, 3)),
                   RationalInterval(Rational(2, 3), Rational(1))});
    for (auto _ : state) benchmark::DoNotOptimize(p.evaluate_interval(box));
}
BENCHMARK(BM_IntervalEnclosure);

static void BM_StandardBuild(benchmark::State& state) {
    builder::BuilderCaps caps;
    caps.k_max = static_cast<int>(state.range(0));
    caps.n_max = 2;
    caps.budget = 200000;
    caps.poly_prefix = 50;
    for (auto _ : state) {
        auto a = builder::new_approximation(builder::Mode::standard_embedded, std::nullopt, caps);
        while (a.depth() < caps.k_max) a = builder::extend_level(a);
        benchmark::DoNotOptimize(a.ledger.size());
    }
}
BENCHMARK(BM_StandardBuild)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SumDecompose(benchmark::State& state) {
    const Rational y(Integer(12345), pow3(9));
    for (auto _ : state) benchmark::DoNotOptimize(ternary::sum_decompose(y, 9));
}
BENCHMARK(BM_SumDecompose);

static void BM_SigmaDigits(benchmark::State& state) {
    const Rational x(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(vonneumann::sigma_digits(x, 5));
}
BENCHMARK(BM_SigmaDigits);

BENCHMARK_MAIN();

#include "qunip/minors.hpp"

#include <benchmark/benchmark.h>

using namespace qunip;

namespace {

void BM_ScalarArithmetic(benchmark::State& state)
{
    ScalarQ a = ScalarQ(1) - ScalarQ::q_pow(2), b = ScalarQ::q_pow(-1) + ScalarQ::q_pow(3);
    for (auto _ : state) {
        ScalarQ x = (a * b + a.bar()) / (b - ScalarQ(2));
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_ScalarArithmetic);

// q-shuffle of dual root vectors in A3, the inner loop of every PBW construction.
void BM_ShuffleA3(benchmark::State& state)
{
    auto d = RootDatum::preset("A3");
    Algebra alg(d);
    BraidEngine br(alg);
    ReducedWord w(d, {0, 1, 0, 2, 1, 0});
    const int n = static_cast<int>(state.range(0));
    DualVec x = br.pbw_dual(w, {n, 0, 0, 0, 1, 0}, 1), y = br.pbw_dual(w, {0, 0, 1, 1, 0, n}, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(alg.product(x, y));
    state.counters["words"] = static_cast<double>(alg.product(x, y).size());
}
BENCHMARK(BM_ShuffleA3)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_WeightBasis(benchmark::State& state)
{
    auto d = RootDatum::preset("A3");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Algebra alg(d);
        benchmark::DoNotOptimize(alg.weight_basis({n, n, n}));
    }
}
BENCHMARK(BM_WeightBasis)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_DualCanonicalWeight(benchmark::State& state)
{
    auto d = RootDatum::preset("A2");
    ReducedWord w(d, {0, 1, 0});
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Algebra alg(d);
        BraidEngine br(alg);
        DualCanonical dc(br);
        benchmark::DoNotOptimize(dc.dual_canonical_weight(w, RootVec({n, n}), 1));
    }
}
BENCHMARK(BM_DualCanonicalWeight)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_StrongCompatibilityA2(benchmark::State& state)
{
    auto d = RootDatum::preset("A2");
    ReducedWord w(d, {0, 1, 0});
    for (auto _ : state) {
        Algebra alg(d);
        BraidEngine br(alg);
        DualCanonical dc(br);
        Minors mi(dc);
        benchmark::DoNotOptimize(mi.check_strong_compatibility(w, 3));
    }
}
BENCHMARK(BM_StrongCompatibilityA2)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();

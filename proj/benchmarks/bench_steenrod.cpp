#include "grw/polyf2.hpp"
#include "grw/steenrod.hpp"

#include <benchmark/benchmark.h>

using namespace grw::steenrod;

static void BM_theta_milnor(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(theta(n));
}
BENCHMARK(BM_theta_milnor)->Arg(5)->Arg(6)->Arg(7);

static void BM_theta_serre_cartan(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(to_serre_cartan(theta(n)));
}
BENCHMARK(BM_theta_serre_cartan)->Arg(5)->Arg(6)->Arg(7);

static void BM_milnor_product(benchmark::State& state)
{
    auto a = enumerate_milnor_basis(16);
    auto b = enumerate_milnor_basis(12);
    for (auto _ : state)
        for (const auto& x : a)
            for (const auto& y : b)
                benchmark::DoNotOptimize(milnor_product(x, y));
}
BENCHMARK(BM_milnor_product);

static void BM_antipode_top_square(benchmark::State& state)
{
    int64_t k = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(antipode(SteenrodOp::sq(k)));
}
BENCHMARK(BM_antipode_top_square)->Arg(26)->Arg(57);

static void BM_theta_action_full(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    grw::poly::PolyF2 p = grw::poly::PolyF2::one(n);
    for (int i = 0; i < n; ++i)
        p = p * grw::poly::PolyF2::var(n, i);
    for (auto _ : state)
        benchmark::DoNotOptimize(grw::poly::theta_action(p));
}
BENCHMARK(BM_theta_action_full)->Arg(5)->Arg(6)->Arg(7);

BENCHMARK_MAIN();

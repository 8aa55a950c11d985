#include "grw/gammagraded.hpp"

#include <benchmark/benchmark.h>

using namespace grw;
using namespace grw::gamma;
using namespace grw::rep;

static void BM_gamma_lattice_d4(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    auto table = catalog("d4");
    for (auto _ : state) {
        auto ring = std::make_shared<RepRing>(table, Field::Real);
        GammaFiltration gf(ring);
        benchmark::DoNotOptimize(gf.gamma_lattice(n).rank());
    }
}
BENCHMARK(BM_gamma_lattice_d4)->Arg(4)->Arg(8);

static void BM_gamma_lattice_z4sq(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    auto table = catalog("z4^2");
    for (auto _ : state) {
        auto ring = std::make_shared<RepRing>(table, Field::Real);
        GammaFiltration gf(ring);
        benchmark::DoNotOptimize(gf.gamma_lattice(n).rank());
    }
}
BENCHMARK(BM_gamma_lattice_z4sq)->Arg(4)->Arg(6);

static void BM_dec_dims_z4cube(benchmark::State& state)
{
    auto table = catalog("z4^3");
    for (auto _ : state) {
        auto ring = std::make_shared<RepRing>(table, Field::Real);
        GammaFiltration gf(ring);
        int acc = 0;
        for (int n = 1; n <= 4; ++n)
            acc += gf.dec_dim(n);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_dec_dims_z4cube)->Unit(benchmark::kMillisecond);

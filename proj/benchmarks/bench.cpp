#include <benchmark/benchmark.h>

#include "evenparity/beam_splitter.hpp"
#include "evenparity/detector.hpp"
#include "evenparity/engineering.hpp"
#include "evenparity/wigner.hpp"

using namespace evenparity;

static void BM_BsColumn(benchmark::State& state)
{
    const int x = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bs_column(x, x));
}
BENCHMARK(BM_BsColumn)->Arg(10)->Arg(40)->Arg(140);

static void BM_PovmElement(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const double eta = 0.9;
    const FockVector control = flat_control(2 * default_povm_cutoff(n, eta));
    for (auto _ : state) benchmark::DoNotOptimize(povm_element(control, n, eta));
}
BENCHMARK(BM_PovmElement)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_HeraldLossy(benchmark::State& state)
{
    const double eta = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(cat_herald_lossy(std::sqrt(20.0), 0.82, 20, eta));
}
BENCHMARK(BM_HeraldLossy)->Arg(100)->Arg(95)->Arg(90)->Unit(benchmark::kMillisecond);

static void BM_WignerGrid(benchmark::State& state)
{
    const Complex beta{std::sqrt(20.0), 0.0};
    const ComplexMatrix rho = outer_product(cat_herald(beta, 0.82, 20).normalized_pure());
    GridSpec spec = default_grid(beta);
    spec.nx = spec.np = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(wigner(rho, spec));
}
BENCHMARK(BM_WignerGrid)->Arg(81)->Arg(281)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

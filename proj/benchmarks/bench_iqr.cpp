#include <benchmark/benchmark.h>

#include "iqr/numerics.hpp"
#include "iqr/oracle.hpp"
#include "iqr/spectrum.hpp"
#include "iqr/wavefn.hpp"

using namespace iqr;

namespace {
const PotentialSpec& hulthen_strong() {
    static const PotentialSpec s = PotentialSpec::hulthen(4.0, 0.25, 1.0);
    return s;
}
}  // namespace

static void BM_SolveEnergyClosed(benchmark::State& state) {
    const PotentialSpec& spec = hulthen_strong();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_energy({1, 1, 3}, spec));
    }
}
BENCHMARK(BM_SolveEnergyClosed);

static void BM_QuantizeNumeric(benchmark::State& state) {
    const PotentialSpec& spec = hulthen_strong();
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantize_numeric({1, 1, 3}, spec));
    }
}
BENCHMARK(BM_QuantizeNumeric);

static void BM_MomentumIntegralNumeric(benchmark::State& state) {
    const SpectrumContext ctx = SpectrumContext::make(hulthen_strong(), 1, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(momentum_integral_numeric(-5.0, ctx));
    }
}
BENCHMARK(BM_MomentumIntegralNumeric);

static void BM_Hypergeometric2F1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_2f1_terminating(n, 33.4, 31.0, 0.37));
    }
}
BENCHMARK(BM_Hypergeometric2F1)->Arg(2)->Arg(10)->Arg(40);

static void BM_OracleEigenLowest(benchmark::State& state) {
    const int npts = static_cast<int>(state.range(0));
    RadialGrid grid;
    grid.r_min = 1e-4;
    grid.r_max = 120.0;
    grid.n_points = npts;
    const Tridiagonal T = build_hamiltonian(hulthen_strong(), 1, 3, grid,
                                            CentrifugalMode::Pekeris);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigen_lowest(T, 2, grid.h()));
    }
}
BENCHMARK(BM_OracleEigenLowest)->Arg(1000)->Arg(4000);

static void BM_GaussLegendreBuild(benchmark::State& state) {
    // cache-defeating: alternate between two orders not used elsewhere
    for (auto _ : state) {
        const GaussRule& g = gauss_legendre(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(g.x.data());
    }
}
BENCHMARK(BM_GaussLegendreBuild)->Arg(64)->Arg(512);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "aee/coefficient_table.hpp"
#include "aee/energy_series.hpp"
#include "aee/oracle.hpp"
#include "aee/presets.hpp"
#include "aee/solver.hpp"

namespace {

void BM_BuildTables(benchmark::State& state) {
    const aee::Potential p = aee::table_preset(3).potential;
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(aee::build_tables(p, order));
}
BENCHMARK(BM_BuildTables)->Arg(10)->Arg(20)->Arg(30);

void BM_SeriesCoefficients(benchmark::State& state) {
    const aee::Potential p = aee::table_preset(4).potential;
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(aee::d_coefficients(p, n_max));
}
BENCHMARK(BM_SeriesCoefficients)->Arg(14)->Arg(28)->Arg(39)->Unit(benchmark::kMillisecond);

void BM_SolveRange(benchmark::State& state) {
    const aee::TablePreset pr = aee::table_preset(static_cast<int>(state.range(0)));
    const aee::EnergySeries s = aee::preset_series(pr);
    aee::SolveOptions opts;
    opts.fixed_truncation = pr.n_max;
    opts.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(aee::solve_range(s, pr.n_lo, pr.n_hi, opts));
}
BENCHMARK(BM_SolveRange)->DenseRange(1, 4);

void BM_DiagSpectrum(benchmark::State& state) {
    const aee::Potential p = aee::table_preset(1).potential;
    aee::DiagOptions opts;
    opts.basis_size = static_cast<int>(state.range(0));
    opts.omega = 11.0;
    for (auto _ : state) benchmark::DoNotOptimize(aee::diag_spectrum(p, 12, opts));
}
BENCHMARK(BM_DiagSpectrum)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ShootingRefine(benchmark::State& state) {
    const aee::Potential p = aee::table_preset(4).potential;
    for (auto _ : state) benchmark::DoNotOptimize(aee::refine_energy_shooting(p, {113.31531, 0.0}));
}
BENCHMARK(BM_ShootingRefine)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <map>

#include "bcdim/bc_conductor.hpp"
#include "bcdim/newspace_dims.hpp"
#include "bcdim/oracle.hpp"
#include "bcdim/quad_local.hpp"
#include "bcdim/validate.hpp"

namespace {

void BM_dim_new_trivial(benchmark::State& state) {
    const bcdim::LevelSpec level(30030); // 2*3*5*7*11*13
    const long long k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(bcdim::dim_new_trivial(level, k));
}
BENCHMARK(BM_dim_new_trivial)->Arg(2)->Arg(12)->Arg(40);

void BM_dim_corr(benchmark::State& state) {
    const bcdim::LevelSpec level(2310);
    for (auto _ : state) benchmark::DoNotOptimize(bcdim::dim_corr(level, 23, 2));
}
BENCHMARK(BM_dim_corr);

void BM_oracle_full_space(benchmark::State& state) {
    const bcdim::OracleSpace space(210, 0, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bcdim::co_dim(space));
}
BENCHMARK(BM_oracle_full_space)->Arg(2)->Arg(12);

void BM_oracle_newspace(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(bcdim::newspace_inversion(210, 0, 4));
}
BENCHMARK(BM_oracle_newspace);

void BM_bc_level(benchmark::State& state) {
    const bcdim::ImagQuadField K(7);
    std::map<long long, bcdim::LocalRepType> local;
    local.emplace(7, bcdim::Supercuspidal(bcdim::localize(K, 7), bcdim::LocalCharData(2, false)));
    local.emplace(11, bcdim::Special{bcdim::LocalCharData(0, true)});
    local.emplace(3, bcdim::PrincipalSeries{bcdim::LocalCharData(1, false),
                                            bcdim::LocalCharData(0, true)});
    for (auto _ : state) benchmark::DoNotOptimize(bcdim::bc_level(K, local));
}
BENCHMARK(BM_bc_level);

void BM_char_table(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            bcdim::char_table_repdata(13, bcdim::CharTableTarget::SteinbergMinusTrivial));
}
BENCHMARK(BM_char_table);

void BM_closed_form_sweep(benchmark::State& state) {
    const auto levels = bcdim::squarefree_levels_up_to(100);
    for (auto _ : state)
        benchmark::DoNotOptimize(bcdim::closed_form_suite(levels, 12, 1));
}
BENCHMARK(BM_closed_form_sweep)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

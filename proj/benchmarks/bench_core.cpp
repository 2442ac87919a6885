#include <benchmark/benchmark.h>

#include "jrcsim/sim.hpp"

using namespace jrcsim;

namespace {

SystemConfig bench_cfg(int n_tx) {
    SystemConfig cfg;
    cfg.n_tx = n_tx;
    cfg.n_rx = 4;
    cfg.n_rf = 4;
    return cfg;
}

void BM_GenCommChannel(benchmark::State& state) {
    const auto cfg = bench_cfg(static_cast<int>(state.range(0)));
    auto rng = trial_rng(1, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(gen_comm_channel(rng, cfg).matrix);
}
BENCHMARK(BM_GenCommChannel)->Arg(32)->Arg(96);

void BM_DinkelbachSelect(benchmark::State& state) {
    const auto cfg = bench_cfg(32);
    auto rng = trial_rng(2, 0);
    const auto real = make_realization(rng, cfg);
    const auto coeffs =
        linear_coefficients(real.f_rf, real.f_rf, real.comm.matrix,
                            real.radar.h_rad, real.combiners.w_com,
                            real.combiners.w_rad);
    for (auto _ : state)
        benchmark::DoNotOptimize(dinkelbach_select(coeffs, 0.5).objective);
}
BENCHMARK(BM_DinkelbachSelect);

void BM_EvalProposed(benchmark::State& state) {
    const auto cfg = bench_cfg(static_cast<int>(state.range(0)));
    auto rng = trial_rng(3, 0);
    const auto real = make_realization(rng, cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            eval_baseline(BaselineKind::ProposedFlexible, real, cfg).r_joint);
}
BENCHMARK(BM_EvalProposed)->Arg(32)->Arg(96);

}  // namespace

BENCHMARK_MAIN();

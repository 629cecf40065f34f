#include <benchmark/benchmark.h>

#include "wzlab/prime_context.hpp"
#include "wzlab/scan.hpp"
#include "wzlab/suite.hpp"
#include "wzlab/theorems.hpp"
#include "wzlab/wz.hpp"

using namespace wzlab;

static void BM_FastRoute(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fast_residue(TheoremId::T1_2, p, 5));
}
BENCHMARK(BM_FastRoute)->Arg(101)->Arg(499);

static void BM_OracleRoute(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_mod(truncated_sum(TheoremId::T1_2, p), PrimePowerModulus(p, 5)));
  }
}
BENCHMARK(BM_OracleRoute)->Arg(101)->Arg(499)->Unit(benchmark::kMillisecond);

static void BM_PrimeContext(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(PrimeContext(p));
}
BENCHMARK(BM_PrimeContext)->Arg(101)->Arg(499)->Unit(benchmark::kMillisecond);

static void BM_WzResidual(benchmark::State& state) {
  const auto pair = state.range(0) == 0 ? WzPairId::PairA : WzPairId::PairB;
  for (auto _ : state) benchmark::DoNotOptimize(wz_residual(pair, 30, 17));
}
BENCHMARK(BM_WzResidual)->Arg(0)->Arg(1);

static void BM_Check(benchmark::State& state, const char* id) {
  const PrimeContext ctx(499);
  const CheckDescriptor& d = find_check(id);
  for (auto _ : state) benchmark::DoNotOptimize(run_check_detailed(d, ctx));
}
BENCHMARK_CAPTURE(BM_Check, morley, "sec3.morley");
BENCHMARK_CAPTURE(BM_Check, telescope, "sec4.telescope")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Check, piece_term, "sec4.piece-term")->Unit(benchmark::kMillisecond);

static void BM_ScanTheorems(benchmark::State& state) {
  ScanConfig cfg;
  cfg.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(scan(cfg));
}
BENCHMARK(BM_ScanTheorems)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

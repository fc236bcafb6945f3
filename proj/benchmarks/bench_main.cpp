#include <benchmark/benchmark.h>

#include "menon/arith.hpp"
#include "menon/characters.hpp"
#include "menon/harness.hpp"
#include "menon/identities.hpp"

namespace {

void BM_Factorize(benchmark::State& state) {
  menon::u64 n = 9'000'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menon::factorize(n));
    n = n == 9'999'999 ? 9'000'000 : n + 1;
  }
}
BENCHMARK(BM_Factorize);

void BM_KleePhi(benchmark::State& state) {
  const auto n = static_cast<menon::u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(menon::klee_phi(n, 2));
}
BENCHMARK(BM_KleePhi)->Arg(4096)->Arg(9'699'690);

void BM_EnumerateCharacters(benchmark::State& state) {
  const auto n = static_cast<menon::u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(menon::enumerate_characters(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(menon::euler_phi(n)));
}
BENCHMARK(BM_EnumerateCharacters)->Arg(360)->Arg(4096);

void BM_Conductor(benchmark::State& state) {
  const auto chars = menon::enumerate_characters(static_cast<menon::u64>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menon::conductor(chars[i]));
    i = (i + 1) % chars.size();
  }
}
BENCHMARK(BM_Conductor)->Arg(720)->Arg(4096);

void BM_ConductorByScan(benchmark::State& state) {
  const auto chars = menon::enumerate_characters(static_cast<menon::u64>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menon::conductor_by_scan(chars[i]));
    i = (i + 1) % chars.size();
  }
}
BENCHMARK(BM_ConductorByScan)->Arg(720);

void BM_GeneralizedSum(benchmark::State& state) {
  const auto n = static_cast<menon::u64>(state.range(0));
  const menon::SumContext ctx(n);
  const auto chars = ctx.group().characters();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.generalized_sum(2, chars[i]));
    i = (i + 1) % chars.size();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx.group().size()));
}
BENCHMARK(BM_GeneralizedSum)->Arg(1024)->Arg(4096)->Arg(3600);

void BM_CharShiftSum(benchmark::State& state) {
  const auto chars = menon::enumerate_characters(4096);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menon::char_shift_sum(2, 12, 2, 4, chars[i]));
    i = (i + 1) % chars.size();
  }
}
BENCHMARK(BM_CharShiftSum);

void BM_Theorem1Sweep(benchmark::State& state) {
  menon::SweepConfig cfg;
  cfg.identity = menon::Identity::theorem1;
  cfg.n_max = 1024;
  cfg.s_values = {2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(menon::run_sweep(cfg));
}
BENCHMARK(BM_Theorem1Sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

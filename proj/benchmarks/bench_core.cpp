#include <benchmark/benchmark.h>

#include "zl/bounds.hpp"
#include "zl/feasibility.hpp"
#include "zl/proof_chains.hpp"
#include "zl/verifier.hpp"

using namespace zl;

// Two surds whose values agree to about 1e-9, so the comparison cannot
// stop at the cheap sign checks.
static void BM_SurdCmpClose(benchmark::State& state) {
  const Surd a(Rational(2239, 6), Rational(5015746, 36));
  const Surd b(Rational(746), Rational(0));
  for (auto _ : state) benchmark::DoNotOptimize(surd_cmp(a, b));
}
BENCHMARK(BM_SurdCmpClose);

static void BM_EvalBound(benchmark::State& state) {
  std::int64_t g = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_bound(BoundKind::Jf, {g, 7}));
    g = (g + 1) % 1000;
  }
}
BENCHMARK(BM_EvalBound);

static void BM_Envelope(benchmark::State& state) {
  const auto fam = state.range(0) == 0 ? Family::I : Family::J;
  std::int64_t g = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(envelope({g, 3}, fam));
    g = (g + 1) % 1000;
  }
}
BENCHMARK(BM_Envelope)->Arg(0)->Arg(1);

static void BM_MaxAllowedN(benchmark::State& state) {
  std::int64_t g = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_allowed_N({g, 0}, Family::I));
    g = (g + 1) % 2000;
  }
}
BENCHMARK(BM_MaxAllowedN);

static void BM_ChainReplay(benchmark::State& state) {
  ChainParams p;
  p.g = 2;
  p.R = 1;
  p.N = 12;
  for (auto _ : state) benchmark::DoNotOptimize(thm2_infinity_chain(p));
}
BENCHMARK(BM_ChainReplay);

static void BM_CrossoverJ(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(find_crossover_J(state.range(0), 50));
}
BENCHMARK(BM_CrossoverJ)->Arg(1)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_SearchSmallBox(benchmark::State& state) {
  SearchBox box;
  box.theorem = SearchTheorem::Two;
  box.g_max = 1;
  box.R_max = 2;
  box.N_max = static_cast<std::int64_t>(state.range(0));
  box.p_max = 14;
  box.drop_mask = kDropAll;
  box.keep_per_task = 16;
  for (auto _ : state) benchmark::DoNotOptimize(feasibility_search(box));
}
BENCHMARK(BM_SearchSmallBox)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

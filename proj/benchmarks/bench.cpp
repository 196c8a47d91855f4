#include <benchmark/benchmark.h>

#include "qmv/corpus.hpp"
#include "qmv/hsmonad.hpp"
#include "qmv/laws.hpp"
#include "qmv/suite.hpp"
#include "qmv/topology.hpp"

using namespace qmv;

static void BM_SampledLaws(benchmark::State& state) {
  auto q = make_rplus();
  for (auto _ : state) {
    auto r = check_quantale_laws(
        *q, CheckMode::sampled(7, static_cast<int>(state.range(0))));
    benchmark::DoNotOptimize(r.entries.size());
  }
}
BENCHMARK(BM_SampledLaws)->Arg(100)->Arg(1000);

static void BM_HausdorffSmythDistance(benchmark::State& state) {
  auto sp = oline_space();
  const Subset all = full_subset(*sp);
  for (auto _ : state)
    for (Subset a = 0; a <= all; ++a)
      for (Subset b = 0; b <= all; ++b)
        benchmark::DoNotOptimize(d_s(*sp, a, b));
}
BENCHMARK(BM_HausdorffSmythDistance);

static void BM_BrSuite(benchmark::State& state) {
  auto sp = oline_space();
  for (auto _ : state) {
    auto r = check_br_properties(*sp, "bench");
    benchmark::DoNotOptimize(r.entries.size());
  }
}
BENCHMARK(BM_BrSuite);

static void BM_RobustTopology(benchmark::State& state) {
  auto sp = random_space(make_chain(3), 3, 17);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_robust_topology(*sp).size());
}
BENCHMARK(BM_RobustTopology);

static void BM_FullSuite(benchmark::State& state) {
  SuiteConfig cfg;
  cfg.samples = 50;
  for (auto _ : state) {
    auto r = run_suite(cfg);
    benchmark::DoNotOptimize(r.entries.size());
  }
}
BENCHMARK(BM_FullSuite);

BENCHMARK_MAIN();

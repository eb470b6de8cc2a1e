#include <benchmark/benchmark.h>

#include "domir/domir.hpp"

namespace {

using namespace domir;

void BM_MaxMatching(benchmark::State& state) {
  InstanceGenerator gen(1);
  const Graph g = gen.gnp(static_cast<int>(state.range(0)), 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(max_matching(g).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxMatching)->RangeMultiplier(2)->Range(32, 1024)->Complexity();

void BM_SolveExact(benchmark::State& state) {
  InstanceGenerator gen(2);
  const auto inst = gen.capacitated_gnp(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(inst).s.count());
}
BENCHMARK(BM_SolveExact)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_SolveApprox(benchmark::State& state) {
  InstanceGenerator gen(3);
  const auto inst = gen.capacitated_gnp(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_approx(inst, Rational(1, 6)).s.count());
}
BENCHMARK(BM_SolveApprox)->DenseRange(12, 24, 6)->Unit(benchmark::kMillisecond);

void BM_SolveIRmax(benchmark::State& state) {
  InstanceGenerator gen(4);
  const Graph g = gen.gnp(static_cast<int>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_IR(g).size);
}
BENCHMARK(BM_SolveIRmax)->DenseRange(10, 30, 10)->Unit(benchmark::kMillisecond);

void BM_SolveIrMin(benchmark::State& state) {
  InstanceGenerator gen(5);
  const Graph g = gen.gnp(static_cast<int>(state.range(0)), 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_ir(g).size);
}
BENCHMARK(BM_SolveIrMin)->DenseRange(10, 30, 10)->Unit(benchmark::kMillisecond);

void BM_VerifyRecurrences(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_recurrences(1.40202L).all_pass);
}
BENCHMARK(BM_VerifyRecurrences)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

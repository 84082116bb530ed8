#include <benchmark/benchmark.h>

#include "seedlang/seedlang.hpp"

using namespace seedlang;

static void BM_SolvesBruteForce(benchmark::State& state) {
  const Seed seed = Seed::parse("##-#------#-##");
  const ProblemSpec spec(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(solves(seed, spec));
}
BENCHMARK(BM_SolvesBruteForce)->Arg(19)->Arg(24)->Arg(32);

static void BM_ValidFactorCheck(benchmark::State& state) {
  const Seed seed = Seed::parse("##-#------#-##");
  const int margin = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(valid_factor_check(seed, margin, 2));
}
BENCHMARK(BM_ValidFactorCheck)->Arg(5)->Arg(10)->Arg(18);

static void BM_ShK(benchmark::State& state) {
  const std::vector<Seed> words = {Seed::parse("##-#--#-#"), Seed::parse("#--##-#"), Seed::parse("-#-#--##")};
  for (auto _ : state) benchmark::DoNotOptimize(sh_k(words));
}
BENCHMARK(BM_ShK);

static void BM_EnumerateGeneratingSets(benchmark::State& state) {
  const int margin = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_generating_sets(margin, 2).size());
}
BENCHMARK(BM_EnumerateGeneratingSets)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_UnionAutomaton(benchmark::State& state) {
  const int margin = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(union_automaton(margin, 2).state_count());
}
BENCHMARK(BM_UnionAutomaton)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Minimize(benchmark::State& state) {
  const auto automaton = build_automaton(enumerate_generating_sets(5, 2)[0]);
  for (auto _ : state) benchmark::DoNotOptimize(minimize(automaton).state_count());
}
BENCHMARK(BM_Minimize);

static void BM_OptimalSeed(benchmark::State& state) {
  const ProblemSpec spec(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_seed(spec, spec.m).best_weight);
}
BENCHMARK(BM_OptimalSeed)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_SingleErrorTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(asymptotics_table(1, 5, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_SingleErrorTable)->Arg(40)->Arg(200);

BENCHMARK_MAIN();

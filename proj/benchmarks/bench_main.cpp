#include <benchmark/benchmark.h>

#include "nikishin/asymptotics.hpp"
#include "nikishin/curve.hpp"
#include "nikishin/equilibrium.hpp"
#include "nikishin/mop.hpp"
#include "nikishin/weights.hpp"

using namespace nikishin;

static void BM_Moments(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(moments(1, 7, k));
}
BENCHMARK(BM_Moments)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

static void BM_ComputeQ(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(compute_Q(n, precision_for(n)));
}
BENCHMARK(BM_ComputeQ)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_BranchesAt(benchmark::State& st) {
  const PrecCtx ctx(static_cast<unsigned>(st.range(0)));
  BigComplex z(3.0, 2.0, ctx);
  for (auto _ : st) benchmark::DoNotOptimize(branches_at(z));
}
BENCHMARK(BM_BranchesAt)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

static void BM_KernelDiag(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  KernelCD K(n, precision_for(n));
  BigFloat x(2.0, K.ctx());
  for (auto _ : st) benchmark::DoNotOptimize(K.diag(x));
}
BENCHMARK(BM_KernelDiag)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_SolveEquilibrium(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(solve_equilibrium({m, m, 1e-6}));
}
BENCHMARK(BM_SolveEquilibrium)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

// Serial reference vs OpenMP kernels. Thread count comes from OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "peskin/biop.hpp"
#include "peskin/curve.hpp"
#include "peskin/initial.hpp"
#include "peskin/integrator.hpp"
#include "peskin/reference.hpp"

using namespace peskin;

namespace {

Curve demo(std::size_t n) {
  InitialSpec s;
  return make_initial(s, n);
}

template <class F>
void run_bench(benchmark::State& state, F f) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Curve c = demo(n);
  const SpectralPlan plan(n);
  for (auto _ : state) benchmark::DoNotOptimize(f(c, plan));
  state.SetComplexityN(state.range(0));
}

void BM_kernel_omp(benchmark::State& s) { run_bench(s, [](const Curve& c, const SpectralPlan& p) { return kernel_matrix(c, p); }); }
void BM_kernel_ref(benchmark::State& s) {
  run_bench(s, [](const Curve& c, const SpectralPlan& p) { return reference::kernel_matrix(c, p); });
}
void BM_remainder_omp(benchmark::State& s) { run_bench(s, [](const Curve& c, const SpectralPlan& p) { return remainder(c, p); }); }
void BM_remainder_ref(benchmark::State& s) {
  run_bench(s, [](const Curve& c, const SpectralPlan& p) { return reference::remainder(c, p); });
}
void BM_star_omp(benchmark::State& s) { run_bench(s, [](const Curve& c, const SpectralPlan&) { return star_norm(c); }); }
void BM_star_ref(benchmark::State& s) { run_bench(s, [](const Curve& c, const SpectralPlan&) { return reference::star_norm(c); }); }
void BM_step(benchmark::State& s) { run_bench(s, [](const Curve& c, const SpectralPlan& p) { return step(c, 0.01, p); }); }

}  // namespace

BENCHMARK(BM_kernel_omp)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_kernel_ref)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_remainder_omp)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_remainder_ref)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_star_omp)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_star_ref)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_step)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNSquared);

BENCHMARK_MAIN();

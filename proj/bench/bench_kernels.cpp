// Serial reference kernels against their OpenMP counterparts. Each pair
// runs the same arguments so the reported times are directly comparable.

#include <benchmark/benchmark.h>

#include "symcon/characters.hpp"
#include "symcon/kernels.hpp"
#include "symcon/repmodels.hpp"

namespace {

using namespace symcon;

template <auto Kernel>
void character_values(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n));
  state.counters["classes"] = static_cast<double>(partition_count(n));
}

template <auto Kernel>
void schur_multiplicities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& table = character_table(n);
  const auto f = module_char(ModuleSpec(ModuleId::PsiA), n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(table, f));
}

template <auto Kernel>
void sum_plethystic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto F = foulkes_series(0, n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n, F, false));
}

}  // namespace

BENCHMARK(character_values<kernels::serial::character_values>)->Name("character_values/serial")->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(character_values<kernels::omp::character_values>)->Name("character_values/omp")->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(schur_multiplicities<kernels::serial::schur_multiplicities>)->Name("schur_multiplicities/serial")->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(schur_multiplicities<kernels::omp::schur_multiplicities>)->Name("schur_multiplicities/omp")->DenseRange(12, 16, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(sum_plethystic<kernels::serial::sum_plethystic>)->Name("sum_plethystic/serial")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(sum_plethystic<kernels::omp::sum_plethystic>)->Name("sum_plethystic/omp")->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

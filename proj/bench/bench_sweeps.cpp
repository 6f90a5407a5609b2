// Serial reference vs OpenMP for the λ-sweeps. Arguments are (d, level).

#include <benchmark/benchmark.h>

#include "klr/crystal.hpp"
#include "klr/fock.hpp"
#include "klr/parallel.hpp"
#include "klr/specht.hpp"

using namespace klr;

namespace {

Multicharge zero_charge(int level) { return Multicharge(std::vector<Residue>(static_cast<std::size_t>(level))); }

void qdim_sweep_bench(benchmark::State& state, Exec exec) {
  const int d = static_cast<int>(state.range(0));
  const auto kappa = zero_charge(static_cast<int>(state.range(1)));
  const auto shapes = enumerate_multipartitions(d, kappa.level());
  for (auto _ : state) benchmark::DoNotOptimize(qdim_sweep(shapes, kappa, exec));
  state.counters["shapes"] = static_cast<double>(shapes.size());
  state.counters["threads"] = exec == Exec::parallel ? max_threads() : 1;
}

void BM_QdimSweepSerial(benchmark::State& state) { qdim_sweep_bench(state, Exec::serial); }
void BM_QdimSweepOmp(benchmark::State& state) { qdim_sweep_bench(state, Exec::parallel); }

void hecke_bench(benchmark::State& state, Exec exec) {
  const int d = static_cast<int>(state.range(0));
  const auto kappa = zero_charge(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_hecke_even(d, kappa, exec));
}

void BM_HeckeSerial(benchmark::State& state) { hecke_bench(state, Exec::serial); }
void BM_HeckeOmp(benchmark::State& state) { hecke_bench(state, Exec::parallel); }

void restricted_bench(benchmark::State& state, Exec exec) {
  const int d = static_cast<int>(state.range(0));
  const auto kappa = zero_charge(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_restricted(d, kappa, exec));
}

void BM_RestrictedSerial(benchmark::State& state) { restricted_bench(state, Exec::serial); }
void BM_RestrictedOmp(benchmark::State& state) { restricted_bench(state, Exec::parallel); }

void BM_LltSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_llt(static_cast<int>(state.range(0)), Exec::serial));
}
void BM_LltOmp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_llt(static_cast<int>(state.range(0)), Exec::parallel));
}

void sweep_args(benchmark::internal::Benchmark* b) {
  b->Args({10, 1})->Args({12, 1})->Args({14, 1})->Args({7, 2})->Args({9, 2})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_QdimSweepSerial)->Apply(sweep_args);
BENCHMARK(BM_QdimSweepOmp)->Apply(sweep_args);
BENCHMARK(BM_HeckeSerial)->Apply(sweep_args);
BENCHMARK(BM_HeckeOmp)->Apply(sweep_args);
BENCHMARK(BM_RestrictedSerial)->Args({14, 1})->Args({10, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RestrictedOmp)->Args({14, 1})->Args({10, 3})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LltSerial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LltOmp)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

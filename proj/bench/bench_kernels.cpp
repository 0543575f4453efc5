// Blocked OpenMP kernels vs the serial single-accumulator reference.
#include <benchmark/benchmark.h>

#include "binfact/execution.hpp"
#include "binfact/factorstats.hpp"
#include "binfact/kernels.hpp"
#include "binfact/primes.hpp"
#include "binfact/reference.hpp"

namespace {

const binfact::PrimeTable& table() {
  static const binfact::PrimeTable t = binfact::sieve(4'000'000);
  return t;
}

void BM_sieve(benchmark::State& state) {
  const auto exec = state.range(1) ? binfact::Execution::parallel : binfact::Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(binfact::sieve(static_cast<std::uint64_t>(state.range(0)), exec).size());
}
BENCHMARK(BM_sieve)->Args({1'000'000, 0})->Args({1'000'000, 1})->Args({10'000'000, 0})->Args({10'000'000, 1})
    ->Unit(benchmark::kMillisecond);

void BM_log_g_parallel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binfact::log_g(table(), n, static_cast<double>(n)));
}
BENCHMARK(BM_log_g_parallel)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_log_g_serial_blocked(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binfact::log_g(table(), n, static_cast<double>(n), binfact::Execution::serial));
  }
}
BENCHMARK(BM_log_g_serial_blocked)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_log_g_reference(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binfact::reference::log_g(table(), n, static_cast<double>(n)));
}
BENCHMARK(BM_log_g_reference)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_partial_sum_index(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    const binfact::PartialSumIndex idx(table(), n);
    benchmark::DoNotOptimize(idx.log_g(0.5 * static_cast<double>(n)));
  }
}
BENCHMARK(BM_partial_sum_index)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_bc_parallel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binfact::bc_log_g(table(), n, static_cast<double>(n)));
}
BENCHMARK(BM_bc_parallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_bc_reference(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binfact::reference::bc_log_g(table(), n, static_cast<double>(n)));
}
BENCHMARK(BM_bc_reference)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

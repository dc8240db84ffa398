// Serial vs OpenMP elimination on dense random matrices over F_p.
// Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "shiftkit/linalg.hpp"

using namespace shiftkit;

namespace {

MatrixFp dense(std::size_t rows, std::size_t cols) {
  const PrimeField f;
  Rng rng = derive_rng(2024, rows * 7919 + cols);
  MatrixFp m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = f.random(rng);
  return m;
}

template <RrefResult (*Kernel)(const MatrixFp&, const PrimeField&)>
void run(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatrixFp m = dense(n, 2 * n);
  const PrimeField f;
  for (auto _ : state) {
    RrefResult r = Kernel(m, f);
    benchmark::DoNotOptimize(r.pivots.data());
  }
  state.SetComplexityN(state.range(0));
}

void rref_serial_bench(benchmark::State& s) { run<rref_serial>(s); }
void rref_parallel_bench(benchmark::State& s) { run<rref_parallel>(s); }

}  // namespace

BENCHMARK(rref_serial_bench)->Name("rref_serial")->RangeMultiplier(2)->Range(32, 512)->Unit(benchmark::kMillisecond);
BENCHMARK(rref_parallel_bench)->Name("rref_parallel")->RangeMultiplier(2)->Range(32, 512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

// Serial reference vs OpenMP kernels: echelon batch insert, oracle Lie powers,
// table materialization.

#include <benchmark/benchmark.h>

#include <random>

#include "lienil/algebra_oracle.hpp"
#include "lienil/constructions.hpp"

namespace {

using namespace lienil;

std::vector<FpVector> random_vectors(std::size_t count, std::size_t dim, unsigned p) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  std::vector<FpVector> out(count, FpVector(dim));
  for (auto& v : out)
    for (auto& x : v) x = coef(rng);
  return out;
}

void BM_InsertBatch(benchmark::State& state, Exec exec) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto vectors = random_vectors(dim, dim, 3);
  for (auto _ : state) {
    FpSubspace s(dim, 3);
    benchmark::DoNotOptimize(s.insert_batch(vectors, exec));
  }
}

void BM_UpperLiePowers(benchmark::State& state, Exec exec) {
  const auto g = wreath_cyclic(2, 4);
  OracleOptions options;
  options.exec = exec;
  const GroupAlgebra algebra(g, Prime(2), options);
  for (auto _ : state) benchmark::DoNotOptimize(upper_lie_powers(algebra).index);
}

void BM_LowerLiePowers(benchmark::State& state, Exec exec) {
  const auto g = wreath_cyclic(3, 3);
  OracleOptions options;
  options.exec = exec;
  const GroupAlgebra algebra(g, Prime(3), options);
  for (auto _ : state) benchmark::DoNotOptimize(lower_lie_powers(algebra).index);
}

}  // namespace

BENCHMARK_CAPTURE(BM_InsertBatch, serial, Exec::Serial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_InsertBatch, parallel, Exec::Parallel)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK_CAPTURE(BM_UpperLiePowers, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_UpperLiePowers, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LowerLiePowers, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LowerLiePowers, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

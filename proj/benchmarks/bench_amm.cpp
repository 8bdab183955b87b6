#include <benchmark/benchmark.h>

#include "amm/harness.hpp"
#include "amm/pipeline.hpp"
#include "amm/probe.hpp"

namespace {

amm::DenseMatrix input(std::size_t n, std::uint64_t seed) {
  return amm::gen_matrix({n, amm::Distribution::uniform_signed, 1.0, seed});
}

void BM_GramMatvec(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  amm::ImplicitGram const gram(amm::build_probe(n, amm::PaperSchedule{}));
  amm::Vector x(n * n), out(n * n);
  for (std::size_t k = 0; k < x.dim(); ++k) x[k] = 1.0 / double(k + 1);
  for (auto _ : state) {
    gram.apply(x.values(), out.values());
    benchmark::DoNotOptimize(out.values().data());
  }
  state.SetComplexityN(state.range(0));
  state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(2 * n * n * sizeof(double)));
}
BENCHMARK(BM_GramMatvec)->RangeMultiplier(2)->Range(32, 1024)->Complexity(benchmark::oNSquared);

void BM_ApproxMultiply(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  auto const a = input(n, 1), b = input(n, 2);
  amm::ApproxConfig config;
  config.delta = 1e-20;
  for (auto _ : state) benchmark::DoNotOptimize(amm::approx_multiply(a, b, config));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApproxMultiply)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNSquared);

void BM_MatmulExact(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  auto const a = input(n, 1), b = input(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(amm::matmul_exact(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MatmulExact)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

void BM_SamplingBaseline(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  auto const a = input(n, 1), b = input(n, 2);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(amm::baseline_sampling(a, b, 8, ++seed));
}
BENCHMARK(BM_SamplingBaseline)->RangeMultiplier(2)->Range(32, 512);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "fw/chain.hpp"
#include "fw/dominance.hpp"
#include "fw/symmetry.hpp"
#include "fw/weber.hpp"

namespace {

void BM_ComputeThreshold(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(fw::compute_threshold(k).n_threshold);
}
BENCHMARK(BM_ComputeThreshold)->Arg(5)->Arg(25)->Arg(199)->Arg(499);

void BM_MinimizeOnAxis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto chain = fw::build_chain(n, (n / 2) | 1);  // odd chain, k <= n
  for (auto _ : state)
    benchmark::DoNotOptimize(fw::minimize_on_axis(chain).x_star);
}
BENCHMARK(BM_MinimizeOnAxis)->Arg(16)->Arg(128)->Arg(1024);

void BM_SolveWeber(benchmark::State& state) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<fw::Point2> pts;
  for (long i = 0; i < state.range(0); ++i) pts.push_back({u(rng), u(rng)});
  for (auto _ : state)
    benchmark::DoNotOptimize(fw::solve_weber(pts).objective);
}
BENCHMARK(BM_SolveWeber)->Arg(8)->Arg(64)->Arg(512);

void BM_DetectExtension(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto chain = fw::build_chain(2 * n, n % 2 == 0 ? n - 1 : n);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fw::detect_extension(chain.vertices).is_extension_member);
}
BENCHMARK(BM_DetectExtension)->Arg(5)->Arg(25)->Arg(101);

}  // namespace

BENCHMARK_MAIN();

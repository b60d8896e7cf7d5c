#include <benchmark/benchmark.h>

#include <random>

#include "equichain/examples.hpp"
#include "equichain/homology.hpp"
#include "equichain/pipeline.hpp"
#include "equichain/transfer.hpp"

using namespace equichain;

namespace {

GroupPtr cyclic(int p) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(p)); }

ExampleInput bar_resolution(int p) { return gen_bar_resolution(cyclic(p)); }

}  // namespace

static void BM_SmithRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<long>(rng() % 21) - 10;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m).rank);
}
BENCHMARK(BM_SmithRandom)->Arg(16)->Arg(32)->Arg(40);

// Full pipeline on the bar resolution of Z/p over the point, plus homology.
static void BM_GroupHomology(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int top = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto ex = bar_resolution(p);
    auto result = equivariant_strong_equivalence(ex.module, ex.equivalence, top, std::nullopt);
    benchmark::DoNotOptimize(homology_groups(pipeline_quotient(result), top));
  }
}
BENCHMARK(BM_GroupHomology)->Args({2, 5})->Args({3, 5})->Args({2, 7})->Unit(benchmark::kMillisecond);

// Middle and right legs evaluated on every basis word of one degree.
static void BM_PipelineLegs(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ex = gen_circle_example(3);
    auto result = equivariant_strong_equivalence(ex.module, ex.equivalence, degree + 1, std::nullopt);
    for (const auto& w : result.right.source->basis(degree)) {
      benchmark::DoNotOptimize(result.right.alpha(w));
      benchmark::DoNotOptimize(result.right.eta(w));
    }
  }
}
BENCHMARK(BM_PipelineLegs)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

// Basic transfer of the bar resolution action to the point, long tuples.
static void BM_TransferredAction(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ex = bar_resolution(3);
    auto R = DgaPtr(ex.module, ex.module->ring());
    auto action = transfer_basic(ex.equivalence.right, strict_action(ex.module, R), std::nullopt);
    Tuple t(len, 1);
    benchmark::DoNotOptimize(action->act(t, Cell{0, {0}}));
  }
}
BENCHMARK(BM_TransferredAction)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

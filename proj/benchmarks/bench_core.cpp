#include <benchmark/benchmark.h>

#include "hyposign/construct.hpp"
#include "hyposign/poly.hpp"
#include "hyposign/realize.hpp"

using namespace hyposign;

static void BM_ClusterFamilyConvolution(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster_family(ell));
  }
}
BENCHMARK(BM_ClusterFamilyConvolution)->Arg(32)->Arg(100)->Arg(300);

static void BM_ClusterFamilyBinomial(benchmark::State& state) {
  const int ell = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster_family_binomial(ell));
  }
}
BENCHMARK(BM_ClusterFamilyBinomial)->Arg(32)->Arg(100)->Arg(300);

static void BM_BuildCanonical(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<Sign> signs{Sign::Plus};
  for (int k = 0; k < d; ++k) signs.push_back(k % 3 == 1 ? Sign::Minus : Sign::Plus);
  const SignPattern sp = SignPattern::from_signs(signs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_canonical(sp));
  }
}
BENCHMARK(BM_BuildCanonical)->Arg(4)->Arg(8)->Arg(12);

static void BM_EnumerateOrderWords(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<int> components{(d + 1) / 2, d + 1 - (d + 1) / 2};
  const SignPattern sp = SignPattern::from_components(components);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_order_words(sp));
  }
}
BENCHMARK(BM_EnumerateOrderWords)->Arg(8)->Arg(12);

static void BM_SearchHit(benchmark::State& state) {
  const SignPattern sp = SignPattern::parse("S{1,2,1}");
  const OrderWord word = OrderWord::parse("NPP");
  SearchConfig config;
  config.budget = 50;
  config.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_realization(sp, word, config));
  }
}
BENCHMARK(BM_SearchHit);

static void BM_SearchExhausted(benchmark::State& state) {
  // Only the canonical word of a type 1 pattern is realizable; searching any
  // other word burns the whole budget, which is the dominant cost in the
  // falsification sweeps.
  const SignPattern sp = SignPattern::parse("S{1,3,1,1,1}");
  const OrderWord word = OrderWord::parse("PPPPNN");
  SearchConfig config;
  config.budget = 20;
  config.seed = 7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_realization(sp, word, config));
  }
}
BENCHMARK(BM_SearchExhausted);

static void BM_ThreeBlockRealize(benchmark::State& state) {
  const ThreeBlockPlan plan = ThreeBlockPlan::make(3, 9, 0, 0, Side::Left);
  const OrderWord target = OrderWord::parse("NNPNPNNNN");
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize_three_block(plan, target));
  }
}
BENCHMARK(BM_ThreeBlockRealize);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}

#include <benchmark/benchmark.h>

#include "treelie/enumerate.hpp"
#include "treelie/tree_algebra.hpp"
#include "treelie/tree_io.hpp"

using namespace treelie;

namespace {

void BM_EnumerateRooted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto trees = enumerate_rooted(n, 1);
    benchmark::DoNotOptimize(trees);
  }
}
BENCHMARK(BM_EnumerateRooted)->Arg(8)->Arg(10)->Arg(12);

void BM_CanonicalizeFreeTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rooted = enumerate_rooted(n, 1);
  for (auto _ : state) {
    for (const RootedTree& t : rooted) {
      FreeTree tau(t);
      benchmark::DoNotOptimize(tau);
    }
  }
  state.SetItemsProcessed(state.iterations() * rooted.size());
}
BENCHMARK(BM_CanonicalizeFreeTree)->Arg(7)->Arg(9);

void BM_XTilde(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto frees = enumerate_free(n, 1);
  for (auto _ : state) {
    for (const FreeTree& tau : frees) {
      auto image = xtilde(tau);
      benchmark::DoNotOptimize(image);
    }
  }
  state.SetItemsProcessed(state.iterations() * frees.size());
}
BENCHMARK(BM_XTilde)->Arg(7)->Arg(9);

void BM_Diamond(benchmark::State& state) {
  const FreeTree sigma = parse_free("free:(()()(()))");
  const FreeTree tau = parse_free("free:(()(()))");
  for (auto _ : state) {
    auto product = diamond(sigma, tau);
    benchmark::DoNotOptimize(product);
  }
}
BENCHMARK(BM_Diamond);

void BM_LieBracketOfImages(benchmark::State& state) {
  const RootedCombination x = xtilde(parse_free("free:(()()(()))"));
  const RootedCombination y = xtilde(parse_free("free:(()(()))"));
  for (auto _ : state) {
    auto bracket = lie_bracket(x, y);
    benchmark::DoNotOptimize(bracket);
  }
}
BENCHMARK(BM_LieBracketOfImages);

}  // namespace

BENCHMARK_MAIN();

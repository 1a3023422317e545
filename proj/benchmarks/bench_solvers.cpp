#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "tsw/colored.hpp"
#include "tsw/exact.hpp"
#include "tsw/generators.hpp"

using namespace tsw;

namespace {

std::vector<int> shuffled(int n, unsigned seed) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Instance reversed_path(int n) {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = n - 1 - i;
  return Instance::token_swapping(Graph::path(n), t);
}

}  // namespace

// Full configuration space of a path: n! states at worst.
static void BM_BfsReversedPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = reversed_path(n);
  SolveStats stats;
  for (auto _ : state) benchmark::DoNotOptimize(solve_bfs(inst, Configuration::identity(n), {}, &stats));
  state.counters["states"] = static_cast<double>(stats.states);
}
BENCHMARK(BM_BfsReversedPath)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

static void BM_IdaRandomClique(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = Instance::token_swapping(Graph::complete(n), shuffled(n, 7));
  SolveStats stats;
  for (auto _ : state) benchmark::DoNotOptimize(solve_ida(inst, Configuration::identity(n), {}, &stats));
  state.counters["expansions"] = static_cast<double>(stats.states);
}
BENCHMARK(BM_IdaRandomClique)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_BfsRandomClique(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = Instance::token_swapping(Graph::complete(n), shuffled(n, 7));
  for (auto _ : state) benchmark::DoNotOptimize(solve_bfs(inst, Configuration::identity(n)));
}
BENCHMARK(BM_BfsRandomClique)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_SpecialPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst = Instance::token_swapping(Graph::path(n), shuffled(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(solve_path_ts(inst, Configuration::identity(n)));
}
BENCHMARK(BM_SpecialPath)->RangeMultiplier(4)->Range(16, 1024);

static void BM_SpecialStarCts(benchmark::State& state) {
  const int leaves = static_cast<int>(state.range(0));
  const int n = leaves + 1;
  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = v % 5;
  std::vector<int> tokens = colors;
  std::mt19937 rng(11);
  std::shuffle(tokens.begin(), tokens.end(), rng);
  Instance inst = Instance::colored(Graph::star(leaves), colors, tokens);
  for (auto _ : state) benchmark::DoNotOptimize(solve_star_cts(inst, Configuration::identity(n)));
}
BENCHMARK(BM_SpecialStarCts)->RangeMultiplier(4)->Range(16, 1024);

static void BM_GenAlmostTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // Consecutive blocks of three, each block used three times.
  gen::X3cInstance x{n, {}};
  for (int j = 0; j < n; ++j) {
    const int b = 3 * (j / 3);
    x.sets.push_back({b, b + 1, b + 2});
  }
  gen::X3cCover cover;
  for (int j = 0; j < n; j += 3) cover.push_back(j);
  for (auto _ : state) benchmark::DoNotOptimize(gen::gen_almost_tree(x, cover));
}
BENCHMARK(BM_GenAlmostTree)->Arg(3)->Arg(30)->Arg(300);
BENCHMARK_MAIN();

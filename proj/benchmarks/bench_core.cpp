#include <benchmark/benchmark.h>

#include "ilocal/connected.hpp"
#include "ilocal/doubling.hpp"
#include "ilocal/homology.hpp"
#include "ilocal/random.hpp"

using namespace ilocal;

namespace {

// +X_n + ... + X_1, which gives a representative with 2n + 1 cells.
LinearCombination staircase(int n) {
  std::vector<SignedIndex> terms;
  for (int i = n; i >= 1; --i) terms.push_back({Sign::Plus, i});
  return simplify(LinearCombination(std::move(terms)));
}

void BM_RepresentativeHomology(benchmark::State& state) {
  const SplitComplex rep = representative(staircase(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(homology(rep));
  state.SetComplexityN(static_cast<std::int64_t>(rep.size()));
}
BENCHMARK(BM_RepresentativeHomology)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_BuildRepresentative(benchmark::State& state) {
  const LinearCombination lc = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(representative(lc));
}
BENCHMARK(BM_BuildRepresentative)->RangeMultiplier(2)->Range(2, 32);

void BM_LocalPair(benchmark::State& state) {
  const SplitComplex x = representative(staircase(static_cast<int>(state.range(0))));
  const Splitting s = canonical_splitting(x);
  for (auto _ : state) {
    const ChainMap f = local_map_f(x, 1, s);
    const ChainMap g = local_map_g(x, 1, s);
    benchmark::DoNotOptimize(verify_local_pair(f, g));
  }
}
BENCHMARK(BM_LocalPair)->DenseRange(1, 4);

void BM_TensorHomology(benchmark::State& state) {
  Rng rng(7);
  const SplitComplex a = random_split_complex(rng);
  const SplitComplex b = random_split_complex(rng);
  const SplitComplex t = tensor(a, b);
  for (auto _ : state) benchmark::DoNotOptimize(homology(t));
  state.counters["cells"] = static_cast<double>(t.size());
}
BENCHMARK(BM_TensorHomology);

void BM_Decode(benchmark::State& state) {
  const LocalClass cls{staircase(static_cast<int>(state.range(0))), 2};
  const FUModule m = hf_conn(cls).without_orientation();
  for (auto _ : state) benchmark::DoNotOptimize(decode(m, cls.d));
}
BENCHMARK(BM_Decode)->RangeMultiplier(4)->Range(4, 256);

}  // namespace
BENCHMARK_MAIN();

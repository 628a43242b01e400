// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Timings for the enumeration, monad and structure-map kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "capalg/biconvex.hpp"
#include "capalg/capacity.hpp"
#include "capalg/convexity.hpp"
#include "capalg/random.hpp"

namespace capalg {
namespace {

void BM_EnumerateCapacities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_capacities(n, Chain(2), CapacityClass::kAll));
  }
}
BENCHMARK(BM_EnumerateCapacities)->Arg(2)->Arg(3);

void BM_CapacityMult(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Chain chain(2);
  Rng rng(7);
  std::vector<Capacity> index;
  for (int i = 0; i < 4; ++i) index.push_back(random_capacity(n, chain, rng));
  const Capacity outer = random_capacity(4, chain, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mult(outer, index).materialized());
}
BENCHMARK(BM_CapacityMult)->Arg(2)->Arg(3)->Arg(4);

void BM_EnumerateConvex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_convex_structures(n, Chain(2)));
}
BENCHMARK(BM_EnumerateConvex)->Arg(2)->Arg(3);

void BM_EnumerateBiconvex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_biconvex_structures(n, Chain(2)));
}
BENCHMARK(BM_EnumerateBiconvex)->Arg(2)->Arg(3);

void BM_FullStructureMap(benchmark::State& state) {
  const BiconvexStructure b = chain_model_biconvex(Chain(2));
  preimage_atlas(b.size(), Chain(2));  // warm the cache
  for (auto _ : state) benchmark::DoNotOptimize(FullStructureMap::from_biconvex(b));
}
BENCHMARK(BM_FullStructureMap);

void BM_DiamondEmbedding(benchmark::State& state) {
  const BiconvexStructure d = diamond_structure(Chain(2), {0, 0, 1}, {0, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(embedding_search(d, 3));
}
BENCHMARK(BM_DiamondEmbedding);

}  // namespace
}  // namespace capalg

BENCHMARK_MAIN();

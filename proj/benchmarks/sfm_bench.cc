// Copyright 2026 The smx Authors.
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

#include "benchmark/benchmark.h"
#include "smx/instances.h"
#include "smx/random.h"
#include "smx/sfm.h"

namespace smx {
namespace {

void BM_MinNormPoint_CutPlusModular(benchmark::State& state) {
  Rng rng(7);
  const GroundFunction f =
      RandomCutPlusModular(rng, static_cast<std::size_t>(state.range(0)));
  SfmOptions options;
  options.method = SfmMethod::kMinNormPoint;
  for (auto _ : state) {
    benchmark::DoNotOptimize(MinimizeUnconstrained(f, options).value);
  }
}
BENCHMARK(BM_MinNormPoint_CutPlusModular)->RangeMultiplier(2)->Range(8, 128);

void BM_BruteForceMin_CutPlusModular(benchmark::State& state) {
  Rng rng(7);
  const GroundFunction f =
      RandomCutPlusModular(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(BruteForceMin(f).value);
}
BENCHMARK(BM_BruteForceMin_CutPlusModular)->DenseRange(8, 16, 4);

void BM_LovaszExtension(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const GroundFunction f = RandomCoverage(rng, n, 64, 0.2);
  std::vector<double> x(n);
  for (double& v : x) v = UniformReal(rng);
  for (auto _ : state) benchmark::DoNotOptimize(LovaszExtension(f, x));
}
BENCHMARK(BM_LovaszExtension)->RangeMultiplier(4)->Range(16, 256);

}  // namespace
}  // namespace smx

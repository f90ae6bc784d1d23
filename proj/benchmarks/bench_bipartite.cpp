// Copyright 2026 The circq Authors
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

#include <benchmark/benchmark.h>

#include "circq/bipartite.hpp"
#include "circq/random.hpp"

namespace {

using namespace circq;

BipartiteOperator random_operator(std::size_t dA, std::size_t dB) {
  Rng rng(4);
  return BipartiteOperator(random_ginibre(dA * dB, dA * dB, rng), dA, dB);
}

void BM_ApplyAIdentityB(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const BipartiteOperator x = random_operator(d, d);
  for (auto _ : state) benchmark::DoNotOptimize(apply_A_identity_B(x));
}
BENCHMARK(BM_ApplyAIdentityB)->DenseRange(2, 8, 2);

// The brute-force Kraus route that the closed form replaces.
void BM_WeightedLocalUniform(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const BipartiteOperator x = random_operator(d, d);
  const ChannelWeights u = ChannelWeights::uniform(d);
  for (auto _ : state) benchmark::DoNotOptimize(apply_weighted_local(u, std::nullopt, x));
}
BENCHMARK(BM_WeightedLocalUniform)->DenseRange(2, 8, 2);

void BM_ApplyAAndB(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const BipartiteOperator x = random_operator(d, d);
  for (auto _ : state) benchmark::DoNotOptimize(apply_A_and_B(x));
}
BENCHMARK(BM_ApplyAAndB)->DenseRange(2, 8, 2);

void BM_SampleEntangled(benchmark::State& state) {
  Rng rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(sample_entangled_state(2, 3, rng));
}
BENCHMARK(BM_SampleEntangled);

}  // namespace

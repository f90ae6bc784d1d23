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

#include "circq/channels.hpp"
#include "circq/random.hpp"

namespace {

using namespace circq;

void BM_ApplyKraus(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const ChannelWeights w(random_probability_vector(d, rng));
  const ComplexMatrix x = random_ginibre(d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(apply_kraus(w, x));
}
BENCHMARK(BM_ApplyKraus)->RangeMultiplier(2)->Range(4, 64);

void BM_ApplyClosedForm(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const ChannelWeights w(random_probability_vector(d, rng));
  const ComplexMatrix x = random_ginibre(d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(apply_closed_form(w, x));
}
BENCHMARK(BM_ApplyClosedForm)->RangeMultiplier(2)->Range(4, 64);

void BM_ApplyUniform(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const ComplexMatrix x = random_ginibre(d, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(apply_uniform(x));
}
BENCHMARK(BM_ApplyUniform)->RangeMultiplier(2)->Range(4, 64);

void BM_ChannelSpectrum(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const ChannelWeights w = ChannelWeights::uniform(d);
  for (auto _ : state) benchmark::DoNotOptimize(channel_spectrum(w));
}
BENCHMARK(BM_ChannelSpectrum)->DenseRange(2, 8, 2);

void BM_ChoiPtSpectrum(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const ChannelWeights w(random_probability_vector(d, rng));
  for (auto _ : state) benchmark::DoNotOptimize(choi_pt_spectrum(w));
}
BENCHMARK(BM_ChoiPtSpectrum)->DenseRange(2, 8, 2);

}  // namespace

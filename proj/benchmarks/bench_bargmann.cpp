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

#include "circq/bargmann.hpp"
#include "circq/random.hpp"

namespace {

using namespace circq;

void BM_Canonicalize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  std::vector<ComplexVector> v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(random_unit_vector(4, rng));
  const StateTuple psi(std::move(v));
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(psi));
}
BENCHMARK(BM_Canonicalize)->DenseRange(3, 12, 3);

}  // namespace

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

#pragma once

// Local action of circulant channels on bipartite operators, PPT checks and
// the entanglement-erasure demonstration. Composite index (i, j) -> i*dB + j.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "circq/channels.hpp"
#include "circq/matcore.hpp"
#include "circq/random.hpp"
#include "circq/tolerance.hpp"

namespace circq {

// Phi(|i><j|) = P^{j-i} / d with 1-based i, j.
ComplexMatrix basis_image(std::int64_t i, std::int64_t j, std::size_t d);

// (Phi_A (x) id_B)(X) via the partial-trace closed form.
BipartiteOperator apply_A_identity_B(const BipartiteOperator& x);

// (Phi_A (x) Phi_B)(X) via the doubly circulant closed form.
BipartiteOperator apply_A_and_B(const BipartiteOperator& x);

// nullopt stands for the identity channel on that side.
using LocalChannel = std::optional<ChannelWeights>;

// Kraus sum over P^k (x) P^l with weights lambdaA_k lambdaB_l.
BipartiteOperator apply_weighted_local(const LocalChannel& wA, const LocalChannel& wB,
                                       const BipartiteOperator& x);

// vec(1_d) vec(1_d)^dagger on C^d (x) C^d.
BipartiteOperator maximally_entangled_projector(std::size_t d);

struct PptReport {
  double min_eigenvalue;
  bool is_ppt;
  RealVector spectrum;
  Subsystem transposed;
};

PptReport ppt_check(const BipartiteOperator& x, double tol = tol::kStructural,
                    Subsystem side = Subsystem::A);

// For dA = 2 the output of Phi_A (x) id_B equals its own partial transpose on A.
bool pt_invariance_check(const BipartiteOperator& x);

// Block (i, j) depends only on j - i mod dA.
bool is_block_circulant(const BipartiteOperator& x, double tol = tol::kStructural);

// Block circulant and every block circulant.
bool is_doubly_circulant(const BipartiteOperator& x, double tol = tol::kStructural);

// Ginibre states resampled until the partial transpose on A has an
// eigenvalue below -kEntangledMargin.
inline constexpr double kEntangledMargin = 1e-8;
BipartiteOperator sample_entangled_state(std::size_t dA, std::size_t dB, Rng& rng,
                                         std::size_t max_tries = 10000);

struct ErasureDemo {
  BipartiteOperator input;
  BipartiteOperator output;
  PptReport input_ppt;
  PptReport output_ppt;
};

ErasureDemo erasure_demo(std::size_t dA, std::size_t dB, std::uint64_t seed,
                         double tol = tol::kStructural);

}  // namespace circq

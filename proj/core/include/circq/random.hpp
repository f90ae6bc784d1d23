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

// Seeded generators for test inputs and demos. The engine is always owned by
// the caller.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "circq/density_matrix.hpp"
#include "circq/matcore.hpp"

namespace circq {

using Rng = std::mt19937_64;

// Matrix of independent standard complex Gaussians (real and imaginary parts
// each N(0, 1/2)).
ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng);

// G G^dagger / Tr(G G^dagger) with G square Ginibre.
DensityMatrix random_density_matrix(std::size_t d, Rng& rng);
DensityMatrix random_density_matrix(std::size_t d, std::uint64_t seed);

// Haar-random unit vector.
ComplexVector random_unit_vector(std::size_t d, Rng& rng);

// Haar-random unitary (QR of a Ginibre matrix with the phase correction).
ComplexMatrix random_unitary(std::size_t d, Rng& rng);

// Uniform draw from the probability simplex.
std::vector<double> random_probability_vector(std::size_t d, Rng& rng);

}  // namespace circq

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

namespace circq::tol {

// Structural predicates (is_circulant, Hermiticity, unit trace, ...).
inline constexpr double kStructural = 1e-10;

// Clustering of computed eigenvalues.
inline constexpr double kSpectral = 1e-8;

// Probability-vector validation for channel weights.
inline constexpr double kWeights = 1e-12;

// Unit-norm check for state vectors.
inline constexpr double kUnitNorm = 1e-12;

}  // namespace circq::tol

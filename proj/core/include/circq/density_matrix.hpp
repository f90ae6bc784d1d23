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

#include <cstddef>

#include "circq/matcore.hpp"
#include "circq/tolerance.hpp"

namespace circq {

// A positive semidefinite, unit-trace matrix. Validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix, double tol = tol::kStructural);

  // Pure state |psi><psi|; psi must have unit norm within tol.
  static DensityMatrix from_pure(const ComplexVector& psi,
                                 double tol = tol::kStructural);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
};

}  // namespace circq

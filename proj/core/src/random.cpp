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

#include "circq/random.hpp"

#include <cmath>

#include "circq/errors.hpp"

namespace circq {

ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(rows, cols);
  // Fill in row-major order so the draw sequence is independent of Eigen's
  // storage order.
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g((Eigen::Index)i, (Eigen::Index)j) = Complex(re, im);
    }
  }
  return g;
}

DensityMatrix random_density_matrix(std::size_t d, Rng& rng) {
  if (d == 0) throw DimensionError("random_density_matrix: dimension must be >= 1");
  const ComplexMatrix g = random_ginibre(d, d, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

DensityMatrix random_density_matrix(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_density_matrix(d, rng);
}

ComplexVector random_unit_vector(std::size_t d, Rng& rng) {
  if (d == 0) throw DimensionError("random_unit_vector: dimension must be >= 1");
  ComplexVector v = random_ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  if (d == 0) throw DimensionError("random_unitary: dimension must be >= 1");
  const ComplexMatrix z = random_ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const Complex diag = r(j, j);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(j) *= diag / mag;
  }
  return q;
}

std::vector<double> random_probability_vector(std::size_t d, Rng& rng) {
  if (d == 0) throw DimensionError("random_probability_vector: dimension must be >= 1");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(d);
  double total = 0.0;
  for (auto& x : p) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

}  // namespace circq

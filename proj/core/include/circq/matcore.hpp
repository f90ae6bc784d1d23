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

// Dense complex matrix primitives: cyclic shifts, circulant matrices, the DFT,
// row-major vectorisation, Kronecker products and bipartite reductions.
//
// Indices are 0-based throughout. A 1-based index i in {1, ..., d} maps to
// i - 1, and the cyclic sum i (+) k becomes (i + k) mod d.

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "circq/tolerance.hpp"

namespace circq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Reduces k into [0, d). d must be nonzero.
inline std::size_t mod_dim(std::int64_t k, std::size_t d) {
  const auto sd = static_cast<std::int64_t>(d);
  const std::int64_t r = k % sd;
  return static_cast<std::size_t>(r < 0 ? r + sd : r);
}

// A residue class modulo d with the cyclic sum and difference.
class CyclicIndex {
 public:
  CyclicIndex(std::size_t d, std::int64_t value);

  static CyclicIndex from_one_based(std::size_t d, std::int64_t i) {
    return CyclicIndex(d, i - 1);
  }

  std::size_t dim() const { return dim_; }
  std::size_t value() const { return value_; }
  std::size_t one_based() const { return value_ + 1; }

  CyclicIndex operator+(std::int64_t k) const {
    return CyclicIndex(dim_, static_cast<std::int64_t>(value_) + k);
  }
  CyclicIndex operator-(std::int64_t k) const {
    return CyclicIndex(dim_, static_cast<std::int64_t>(value_) - k);
  }

  friend bool operator==(const CyclicIndex&, const CyclicIndex&) = default;

 private:
  std::size_t dim_;
  std::size_t value_;
};

// First-row coefficients (c_0, ..., c_{d-1}) of a circulant matrix.
struct CirculantCoefficients {
  ComplexVector c;

  std::size_t dim() const { return static_cast<std::size_t>(c.size()); }
};

enum class Subsystem { A, B };

// Operator on C^{dA} (x) C^{dB}. The composite index of |i>|j> is i * dB + j.
class BipartiteOperator {
 public:
  BipartiteOperator(ComplexMatrix matrix, std::size_t dA, std::size_t dB);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dA() const { return dA_; }
  std::size_t dB() const { return dB_; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * dB_ + j; }

 private:
  ComplexMatrix matrix_;
  std::size_t dA_;
  std::size_t dB_;
};

// P^k with entry (i, i (+) k) = 1. P^0 = P^d = 1.
ComplexMatrix cyclic_shift_power(std::size_t d, std::int64_t k);

// sum_k c_k P^k; the first row is (c_0, ..., c_{d-1}).
ComplexMatrix circulant_from_coeffs(const CirculantCoefficients& coeffs);

// True iff X[i, i (+) k] is within tol of X[0, k] for all i, k.
bool is_circulant(const ComplexMatrix& x, double tol = tol::kStructural);

// Unitary F with F[j, k] = omega^{jk} / sqrt(d), omega = exp(2 pi i / d).
// Satisfies F * Omega * F^dagger = P.
ComplexMatrix dft_matrix(std::size_t d);

// Omega^k = diag(1, omega^k, ..., omega^{(d-1) k}).
ComplexMatrix omega_power_diag(std::size_t d, std::int64_t k);

// Row-major flattening: vec(|i><j|) = |i>|j>, so vec(A X B) = (A (x) B^T) vec(X).
ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, std::size_t rows, std::size_t cols);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix partial_trace(const BipartiteOperator& x, Subsystem over);
BipartiteOperator partial_transpose(const BipartiteOperator& x, Subsystem on);

// Largest entry modulus.
double max_abs(const ComplexMatrix& x);

// ||X - X^dagger||_max <= tol * (1 + ||X||_max).
bool is_hermitian(const ComplexMatrix& x, double tol = tol::kStructural);

// Ascending real eigenvalues of a Hermitian matrix. Throws DomainError when
// the Hermiticity gate fails.
RealVector hermitian_spectrum(const ComplexMatrix& x);

// Throws ShapeError unless x is square; returns the dimension.
std::size_t require_square(const ComplexMatrix& x, const char* what);

}  // namespace circq

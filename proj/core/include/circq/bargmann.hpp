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

// Bargmann invariants of pure-state tuples and their canonical form.
//
// For a tuple (psi_1, ..., psi_n) the invariant is the cyclic product
// <psi_1|psi_2><psi_2|psi_3>...<psi_n|psi_1>. Canonicalisation runs in two
// steps: rephase every vector so all consecutive inner products share the
// argument theta/n, then push the Gram matrix through the uniform circulant
// channel and refactor it into vectors. The result has equal consecutive
// inner products, the same argument and a modulus at least as large (AM-GM).

#include <cstddef>
#include <vector>

#include "circq/matcore.hpp"
#include "circq/tolerance.hpp"

namespace circq {

// n unit vectors in C^d. Norms must be 1 within tol; they are then rescaled
// to unit norm exactly.
class StateTuple {
 public:
  explicit StateTuple(std::vector<ComplexVector> vectors, double tol = tol::kUnitNorm);

  std::size_t n() const { return vectors_.size(); }
  std::size_t d() const { return static_cast<std::size_t>(vectors_.front().size()); }
  const ComplexVector& operator[](std::size_t k) const { return vectors_[k]; }
  const std::vector<ComplexVector>& vectors() const { return vectors_; }

 private:
  std::vector<ComplexVector> vectors_;
};

// Hermitian (1e-12), PSD (min eigenvalue >= -1e-10), unit diagonal (1e-12).
class GramMatrix {
 public:
  explicit GramMatrix(ComplexMatrix matrix);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t n() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  ComplexMatrix matrix_;
};

struct CanonicalizationReport {
  Complex original_invariant;
  Complex canonical_invariant;
  // <psi~_1|psi~_2> of the canonical tuple.
  Complex common_inner_product;
  // All consecutive canonical inner products equal ((1/n) sum r_k) e^{i theta/n}
  // within 1e-8.
  bool consecutive_equal;
  // Principal arguments agree within 1e-8.
  bool arg_match;
  // |original| <= |canonical| + 1e-10.
  bool modulus_bound_holds;
};

struct CanonicalResult {
  StateTuple tuple;
  CanonicalizationReport report;
};

// Principal argument in [0, 2 pi).
double principal_arg(Complex z);

// Inner products <psi_k|psi_{k (+) 1}>, k = 0, ..., n-1.
std::vector<Complex> consecutive_inner_products(const StateTuple& psi);

GramMatrix gram(const StateTuple& psi);

Complex bargmann_invariant(const StateTuple& psi);

// Product of the cyclic superdiagonal G[i, i (+) 1].
Complex bargmann_from_gram(const GramMatrix& g);

// psi'_k = e^{i alpha_k} psi_k with alpha_0 = 0 and
// alpha_{k+1} = alpha_k + theta/n - theta_k. Throws DegenerateInputError
// naming the vanishing pair when the invariant is (numerically) zero.
StateTuple phase_align(const StateTuple& psi);

// Phi applied at dimension n. The result is circulant, PSD, unit diagonal.
GramMatrix circulantize_gram(const GramMatrix& g);

// Unit vectors in C^r (r = numerical rank, eigenvalues > 1e-10) whose Gram
// matrix reproduces g.
StateTuple vectors_from_gram(const GramMatrix& g);

CanonicalResult canonicalize(const StateTuple& psi);

// prod r_k / ((1/n) sum r_k)^n with r_k = |<psi_k|psi_{k (+) 1}>|, in (0, 1].
// Multiplying the canonical invariant by it recovers z. z must be the
// invariant of psi.
double rescale_to_set_membership(Complex z, const StateTuple& psi);

}  // namespace circq

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

// The circulant channel family
//
//   Phi_lambda(X) = sum_k lambda_k P^k X P^{-k},   k = 0, ..., d-1,
//
// where P is the cyclic shift and lambda a probability vector. Uniform weights
// give the channel Phi, whose image is always circulant. Also houses the
// mixed-permutation channel Delta (average over all d! permutations), which
// serves as the coarser reference channel.

#include <cstddef>
#include <optional>
#include <vector>

#include "circq/matcore.hpp"
#include "circq/tolerance.hpp"

namespace circq {

// Probability vector (lambda_0, ..., lambda_{d-1}) defining Phi_lambda.
//
// Construction accepts entries >= -1e-12 summing to 1 within 1e-12, clamps
// tiny negatives to zero and renormalises so the stored vector sums to 1.
class ChannelWeights {
 public:
  explicit ChannelWeights(std::vector<double> lambda);

  static ChannelWeights uniform(std::size_t d);
  // lambda = (1, 0, ..., 0): the identity channel.
  static ChannelWeights identity(std::size_t d);

  std::size_t dim() const { return lambda_.size(); }
  double operator[](std::size_t k) const { return lambda_[k]; }
  const std::vector<double>& values() const { return lambda_; }

  // max_k |lambda_k - 1/d| <= tol.
  bool is_uniform(double tol = tol::kWeights) const;

 private:
  ChannelWeights() = default;
  std::vector<double> lambda_;
};

struct ChannelSpectrumReport {
  std::vector<Complex> eigenvalues;
  // Populated for uniform weights only: counts of eigenvalues within 1e-8 of
  // 1 and of 0.
  std::optional<std::size_t> multiplicity_of_one;
  std::optional<std::size_t> multiplicity_of_zero;
};

// alpha_mu = (1/d) sum_k lambda_k omega^{k mu}, mu = 0, ..., d-1.
struct AlphaCoefficients {
  std::vector<Complex> alpha;

  std::size_t dim() const { return alpha.size(); }
};

// Local unitary F (x) conj(F) and the diagonal core sum_i |ii><ii| with
// (F (x) conj F) core (F (x) conj F)^dagger = J(Phi).
struct ChoiSeparableForm {
  ComplexMatrix local_unitary;
  ComplexMatrix core;
};

// Kraus sum. Throws ShapeError when X is not w.dim() x w.dim().
ComplexMatrix apply_kraus(const ChannelWeights& w, const ComplexMatrix& x);

// Entry (i, j) = Tr(P^{-j} Lambda P^{i} X) with Lambda = diag(lambda).
ComplexMatrix apply_closed_form(const ChannelWeights& w, const ComplexMatrix& x);

// c_k = (1/d) Tr(P^{-k} X) = (1/d) sum_i X[i, i (+) k].
CirculantCoefficients circulant_coeffs_of_image(const ComplexMatrix& x);

// Uniform channel Phi via its circulant coefficients.
ComplexMatrix apply_uniform(const ComplexMatrix& x);

// Hilbert-Schmidt adjoint: sum_k lambda_k P^{-k} X P^k.
ComplexMatrix apply_adjoint(const ChannelWeights& w, const ComplexMatrix& x);

// K with K vec(X) = vec(Phi_lambda(X)); equals sum_k lambda_k P^k (x) P^k.
ComplexMatrix natural_representation(const ChannelWeights& w);

ChannelSpectrumReport channel_spectrum(const ChannelWeights& w);

// J = sum_k lambda_k vec(P^k) vec(P^k)^dagger on C^d (x) C^d, Tr J = d.
BipartiteOperator choi(const ChannelWeights& w);

AlphaCoefficients alpha_coefficients(const ChannelWeights& w);

// Ascending eigenvalues of (J / d)^{Gamma_B}, the partially transposed
// trace-normalised Choi state.
RealVector choi_pt_spectrum(const ChannelWeights& w);

// The same spectrum predicted from alpha: alpha_0 once for each diagonal pair
// (i, i) and one +|alpha_{i-j}|, -|alpha_{i-j}| pair for every i < j.
// Ascending.
RealVector predicted_choi_pt_spectrum(const ChannelWeights& w);

// Phi_lambda is entanglement breaking iff max_{mu != 0} |alpha_mu| <= tol,
// i.e. iff lambda is uniform.
bool is_entanglement_breaking(const ChannelWeights& w, double tol = tol::kStructural);

ChoiSeparableForm choi_separable_form(std::size_t d);

// Delta(X) = a 1 + b (J - 1) with J the all-ones matrix, a = Tr(X)/d and b the
// mean off-diagonal entry. Closed form of the average over S_d.
ComplexMatrix mixed_permutation_apply(const ComplexMatrix& x);

}  // namespace circq

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

#include "circq/bipartite.hpp"

#include <string>

#include "circq/errors.hpp"

namespace circq {

namespace {

using Index = Eigen::Index;

void require_dims(const BipartiteOperator& x, const char* what) {
  if (x.dA() * x.dB() != static_cast<std::size_t>(x.matrix().rows()) ||
      x.matrix().rows() != x.matrix().cols()) {
    throw ShapeError(std::string(what) + ": matrix size does not match dA*dB");
  }
}

void require_local(const LocalChannel& w, std::size_t d, const char* side) {
  if (w && w->dim() != d) {
    throw ShapeError(std::string("apply_weighted_local: weights on ") + side +
                     " have length " + std::to_string(w->dim()) +
                     ", subsystem dimension is " + std::to_string(d));
  }
}

}  // namespace

ComplexMatrix basis_image(std::int64_t i, std::int64_t j, std::size_t d) {
  if (d == 0) throw DimensionError("basis_image: dimension must be >= 1");
  const auto sd = static_cast<std::int64_t>(d);
  if (i < 1 || i > sd || j < 1 || j > sd) {
    throw DomainError("basis_image: indices must lie in 1.." + std::to_string(d));
  }
  return cyclic_shift_power(d, j - i) / static_cast<double>(d);
}

BipartiteOperator apply_A_identity_B(const BipartiteOperator& x) {
  require_dims(x, "apply_A_identity_B");
  const std::size_t dA = x.dA();
  const std::size_t dB = x.dB();
  const ComplexMatrix& m = x.matrix();

  // M_k = Tr_A[X (P^{-k} (x) 1)] = sum_a <a|X|a+k>.
  std::vector<ComplexMatrix> traces(dA, ComplexMatrix::Zero(dB, dB));
  for (std::size_t k = 0; k < dA; ++k) {
    for (std::size_t a = 0; a < dA; ++a) {
      traces[k] += m.block(a * dB, ((a + k) % dA) * dB, dB, dB);
    }
    traces[k] /= static_cast<double>(dA);
  }

  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dA; ++i) {
    for (std::size_t j = 0; j < dA; ++j) {
      out.block(i * dB, j * dB, dB, dB) = traces[(j + dA - i) % dA];
    }
  }
  return BipartiteOperator(std::move(out), dA, dB);
}

BipartiteOperator apply_A_and_B(const BipartiteOperator& x) {
  require_dims(x, "apply_A_and_B");
  const std::size_t dA = x.dA();
  const std::size_t dB = x.dB();
  const ComplexMatrix& m = x.matrix();

  // t(rA, rB) = Tr[X (P^{-rA} (x) P^{-rB})].
  ComplexMatrix t = ComplexMatrix::Zero(dA, dB);
  for (std::size_t rA = 0; rA < dA; ++rA) {
    for (std::size_t rB = 0; rB < dB; ++rB) {
      Complex s = 0.0;
      for (std::size_t a = 0; a < dA; ++a) {
        for (std::size_t b = 0; b < dB; ++b) {
          s += m(x.index(a, b), x.index((a + rA) % dA, (b + rB) % dB));
        }
      }
      t(rA, rB) = s / static_cast<double>(dA * dB);
    }
  }

  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dA; ++i) {
    for (std::size_t j = 0; j < dB; ++j) {
      for (std::size_t k = 0; k < dA; ++k) {
        for (std::size_t l = 0; l < dB; ++l) {
          out(x.index(i, j), x.index(k, l)) = t((k + dA - i) % dA, (l + dB - j) % dB);
        }
      }
    }
  }
  return BipartiteOperator(std::move(out), dA, dB);
}

BipartiteOperator apply_weighted_local(const LocalChannel& wA, const LocalChannel& wB,
                                       const BipartiteOperator& x) {
  require_dims(x, "apply_weighted_local");
  require_local(wA, x.dA(), "A");
  require_local(wB, x.dB(), "B");
  const ChannelWeights a = wA ? *wA : ChannelWeights::identity(x.dA());
  const ChannelWeights b = wB ? *wB : ChannelWeights::identity(x.dB());

  const ComplexMatrix& m = x.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a[k] == 0.0) continue;
    for (std::size_t l = 0; l < b.dim(); ++l) {
      if (b[l] == 0.0) continue;
      const ComplexMatrix kraus = kron(cyclic_shift_power(a.dim(), static_cast<std::int64_t>(k)),
                                       cyclic_shift_power(b.dim(), static_cast<std::int64_t>(l)));
      out += (a[k] * b[l]) * (kraus * m * kraus.adjoint());
    }
  }
  return BipartiteOperator(std::move(out), x.dA(), x.dB());
}

BipartiteOperator maximally_entangled_projector(std::size_t d) {
  const ComplexVector v = vec(ComplexMatrix::Identity(d, d));
  return BipartiteOperator(v * v.adjoint(), d, d);
}

PptReport ppt_check(const BipartiteOperator& x, double tol, Subsystem side) {
  require_dims(x, "ppt_check");
  if (!is_hermitian(x.matrix())) {
    throw DomainError("ppt_check: operator is not Hermitian");
  }
  const BipartiteOperator pt = partial_transpose(x, side);
  // Symmetrise so the eigensolver sees an exactly Hermitian input.
  const ComplexMatrix h = 0.5 * (pt.matrix() + pt.matrix().adjoint());
  RealVector spectrum = hermitian_spectrum(h);
  const double min_eig = spectrum(0);
  return PptReport{min_eig, min_eig >= -tol, std::move(spectrum), side};
}

bool pt_invariance_check(const BipartiteOperator& x) {
  if (x.dA() != 2) {
    throw DomainError("pt_invariance_check: needs dA = 2, got dA = " +
                      std::to_string(x.dA()));
  }
  const BipartiteOperator y = apply_A_identity_B(x);
  const ComplexMatrix diff = partial_transpose(y, Subsystem::A).matrix() - y.matrix();
  return max_abs(diff) <= 1e-12 * std::max(1.0, max_abs(y.matrix()));
}

bool is_block_circulant(const BipartiteOperator& x, double tol) {
  require_dims(x, "is_block_circulant");
  const std::size_t dA = x.dA();
  const std::size_t dB = x.dB();
  const ComplexMatrix& m = x.matrix();
  for (std::size_t i = 1; i < dA; ++i) {
    for (std::size_t j = 0; j < dA; ++j) {
      const std::size_t r = (j + dA - i) % dA;
      const auto diff = m.block(i * dB, j * dB, dB, dB) - m.block(0, r * dB, dB, dB);
      if (diff.cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

bool is_doubly_circulant(const BipartiteOperator& x, double tol) {
  if (!is_block_circulant(x, tol)) return false;
  const std::size_t dB = x.dB();
  for (std::size_t r = 0; r < x.dA(); ++r) {
    if (!is_circulant(x.matrix().block(0, r * dB, dB, dB), tol)) return false;
  }
  return true;
}

BipartiteOperator sample_entangled_state(std::size_t dA, std::size_t dB, Rng& rng,
                                         std::size_t max_tries) {
  if (dA < 1 || dB < 1) {
    throw DimensionError("sample_entangled_state: dimensions must be >= 1");
  }
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    BipartiteOperator rho(random_density_matrix(dA * dB, rng).matrix(), dA, dB);
    if (ppt_check(rho).min_eigenvalue < -kEntangledMargin) return rho;
  }
  throw SamplingError("sample_entangled_state: no NPT state found in " +
                      std::to_string(max_tries) + " draws at " + std::to_string(dA) +
                      "x" + std::to_string(dB));
}

ErasureDemo erasure_demo(std::size_t dA, std::size_t dB, std::uint64_t seed, double tol) {
  if (dA < 2 || dB < 2) {
    throw DimensionError("erasure_demo: dA and dB must be >= 2");
  }
  Rng rng(seed);
  BipartiteOperator input = sample_entangled_state(dA, dB, rng);
  BipartiteOperator output = apply_A_identity_B(input);
  PptReport in_report = ppt_check(input, tol);
  PptReport out_report = ppt_check(output, tol);
  return ErasureDemo{std::move(input), std::move(output), std::move(in_report),
                     std::move(out_report)};
}

}  // namespace circq

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

#include "circq/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "circq/channels.hpp"
#include "circq/errors.hpp"

namespace circq {

namespace {

constexpr double kDegenerate = 1e-12;
constexpr double kGramHermitian = 1e-12;
constexpr double kGramDiagonal = 1e-12;
constexpr double kGramPsd = 1e-10;
constexpr double kRankCutoff = 1e-10;
constexpr double kFactorNorm = 1e-8;
constexpr double kPhaseCheck = 1e-10;
constexpr double kReportArg = 1e-8;
constexpr double kReportModulus = 1e-10;

// Distance between two angles on the circle.
double angle_distance(double a, double b) {
  const double two_pi = 2.0 * std::numbers::pi;
  double diff = std::fmod(std::abs(a - b), two_pi);
  return std::min(diff, two_pi - diff);
}

// Throws when the cyclic product vanishes; names the weakest consecutive pair.
void require_nonzero_invariant(const std::vector<Complex>& inner, const char* what) {
  const Complex z = std::accumulate(inner.begin(), inner.end(), Complex(1.0, 0.0),
                                    std::multiplies<>());
  if (std::abs(z) > kDegenerate) return;
  const auto weakest = std::min_element(
      inner.begin(), inner.end(),
      [](const Complex& a, const Complex& b) { return std::abs(a) < std::abs(b); });
  const auto k = static_cast<std::size_t>(weakest - inner.begin());
  const std::size_t next = (k + 1) % inner.size();
  throw DegenerateInputError(std::string(what) +
                             ": Bargmann invariant vanishes; consecutive pair (" +
                             std::to_string(k + 1) + ", " + std::to_string(next + 1) +
                             ") has inner product modulus " +
                             std::to_string(std::abs(*weakest)));
}

}  // namespace

StateTuple::StateTuple(std::vector<ComplexVector> vectors, double tol)
    : vectors_(std::move(vectors)) {
  if (vectors_.empty()) {
    throw DimensionError("StateTuple: a tuple needs at least one vector");
  }
  const Eigen::Index d = vectors_.front().size();
  if (d == 0) {
    throw DimensionError("StateTuple: vectors must have dimension >= 1");
  }
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    auto& v = vectors_[k];
    if (v.size() != d) {
      throw ShapeError("StateTuple: vector " + std::to_string(k + 1) + " has dimension " +
                       std::to_string(v.size()) + ", expected " + std::to_string(d));
    }
    if (!v.allFinite()) {
      throw DomainError("StateTuple: vector " + std::to_string(k + 1) +
                        " has a non-finite entry");
    }
    const double norm = v.norm();
    if (std::abs(norm - 1.0) > tol) {
      throw DomainError("StateTuple: vector " + std::to_string(k + 1) + " has norm " +
                        std::to_string(norm) + ", expected 1");
    }
    v /= norm;
  }
}

GramMatrix::GramMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  const std::size_t n = require_square(matrix_, "GramMatrix");
  if (!matrix_.allFinite()) {
    throw DomainError("GramMatrix: non-finite entry");
  }
  if (max_abs(matrix_ - matrix_.adjoint()) > kGramHermitian) {
    throw DomainError("GramMatrix: matrix is not Hermitian");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Complex diag = matrix_((Eigen::Index)i, (Eigen::Index)i);
    if (std::abs(diag - 1.0) > kGramDiagonal) {
      throw DomainError("GramMatrix: diagonal entry " + std::to_string(i + 1) +
                        " is not 1");
    }
  }
  const double min_eig = hermitian_spectrum(matrix_)(0);
  if (min_eig < -kGramPsd) {
    throw DomainError("GramMatrix: matrix is not positive semidefinite (eigenvalue " +
                      std::to_string(min_eig) + ")");
  }
}

double principal_arg(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  // arg may round up to exactly 2 pi for tiny negative imaginary parts.
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

std::vector<Complex> consecutive_inner_products(const StateTuple& psi) {
  const std::size_t n = psi.n();
  std::vector<Complex> inner(n);
  for (std::size_t k = 0; k < n; ++k) {
    inner[k] = psi[k].dot(psi[(k + 1) % n]);
  }
  return inner;
}

GramMatrix gram(const StateTuple& psi) {
  const std::size_t n = psi.n();
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g((Eigen::Index)i, (Eigen::Index)i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = psi[i].dot(psi[j]);
      g((Eigen::Index)i, (Eigen::Index)j) = v;
      g((Eigen::Index)j, (Eigen::Index)i) = std::conj(v);
    }
  }
  return GramMatrix(std::move(g));
}

Complex bargmann_invariant(const StateTuple& psi) {
  const auto inner = consecutive_inner_products(psi);
  return std::accumulate(inner.begin(), inner.end(), Complex(1.0, 0.0),
                         std::multiplies<>());
}

Complex bargmann_from_gram(const GramMatrix& g) {
  const std::size_t n = g.n();
  Complex z = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    z *= g.matrix()((Eigen::Index)i, (Eigen::Index)((i + 1) % n));
  }
  return z;
}

StateTuple phase_align(const StateTuple& psi) {
  const std::size_t n = psi.n();
  const auto inner = consecutive_inner_products(psi);
  require_nonzero_invariant(inner, "phase_align");

  const double theta = principal_arg(bargmann_invariant(psi));
  const double target = theta / static_cast<double>(n);

  std::vector<ComplexVector> aligned;
  aligned.reserve(n);
  double alpha = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    aligned.push_back(std::polar(1.0, alpha) * psi[k]);
    alpha += target - principal_arg(inner[k]);
  }
  StateTuple out(std::move(aligned));

  for (const Complex& v : consecutive_inner_products(out)) {
    if (angle_distance(principal_arg(v), target) > kPhaseCheck) {
      throw Error("phase_align: consecutive arguments failed to align");
    }
  }
  return out;
}

GramMatrix circulantize_gram(const GramMatrix& g) {
  ComplexMatrix c = apply_uniform(g.matrix());
  // Clean the last-bit asymmetry between c_k and conj(c_{n-k}).
  c = (0.5 * (c + c.adjoint())).eval();
  return GramMatrix(std::move(c));
}

StateTuple vectors_from_gram(const GramMatrix& g) {
  const std::size_t n = g.n();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(g.matrix());
  if (solver.info() != Eigen::Success) {
    throw DomainError("vectors_from_gram: eigensolver did not converge");
  }
  const RealVector& evals = solver.eigenvalues();
  const ComplexMatrix& evecs = solver.eigenvectors();

  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    if (evals(i) > kRankCutoff) kept.push_back(i);
  }
  const auto rank = static_cast<Eigen::Index>(kept.size());

  // Rows of sqrt(Lambda) U^dagger restricted to the kept eigenvalues; column j
  // is the vector realising psi_j.
  ComplexMatrix factor(rank, static_cast<Eigen::Index>(n));
  for (Eigen::Index r = 0; r < rank; ++r) {
    factor.row(r) = std::sqrt(evals(kept[r])) * evecs.col(kept[r]).adjoint();
  }

  std::vector<ComplexVector> vectors;
  vectors.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    vectors.emplace_back(factor.col((Eigen::Index)j));
  }
  return StateTuple(std::move(vectors), kFactorNorm);
}

CanonicalResult canonicalize(const StateTuple& psi) {
  const std::size_t n = psi.n();
  const auto inner = consecutive_inner_products(psi);
  require_nonzero_invariant(inner, "canonicalize");

  const Complex original = bargmann_invariant(psi);
  const StateTuple aligned = phase_align(psi);
  const GramMatrix circulant = circulantize_gram(gram(aligned));
  StateTuple canonical = vectors_from_gram(circulant);

  const double theta = principal_arg(original);
  double mean_modulus = 0.0;
  for (const Complex& v : inner) mean_modulus += std::abs(v);
  mean_modulus /= static_cast<double>(n);
  const Complex predicted = std::polar(mean_modulus, theta / static_cast<double>(n));

  const auto canonical_inner = consecutive_inner_products(canonical);
  const bool consecutive_equal =
      std::all_of(canonical_inner.begin(), canonical_inner.end(),
                  [&](const Complex& v) { return std::abs(v - predicted) <= 1e-8; });
  const Complex canonical_z = bargmann_invariant(canonical);

  CanonicalizationReport report{
      original,
      canonical_z,
      canonical_inner.front(),
      consecutive_equal,
      angle_distance(principal_arg(original), principal_arg(canonical_z)) <= kReportArg,
      std::abs(original) <= std::abs(canonical_z) + kReportModulus,
  };
  return CanonicalResult{std::move(canonical), report};
}

double rescale_to_set_membership(Complex z, const StateTuple& psi) {
  const auto inner = consecutive_inner_products(psi);
  if (std::abs(z) <= kDegenerate) {
    throw DegenerateInputError(
        "rescale_to_set_membership: z = 0 is realised by any tuple with an orthogonal "
        "consecutive pair; no rescaling is defined");
  }
  require_nonzero_invariant(inner, "rescale_to_set_membership");
  const Complex realised = bargmann_invariant(psi);
  if (std::abs(realised - z) > 1e-10 * std::max(1.0, std::abs(z))) {
    throw DomainError("rescale_to_set_membership: z is not the invariant of the tuple");
  }
  const double n = static_cast<double>(inner.size());
  double product = 1.0;
  double mean = 0.0;
  for (const Complex& v : inner) {
    product *= std::abs(v);
    mean += std::abs(v);
  }
  mean /= n;
  return product / std::pow(mean, n);
}

}  // namespace circq

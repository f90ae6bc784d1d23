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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "circq/density_matrix.hpp"
#include "circq/errors.hpp"
#include "circq/matcore.hpp"
#include "circq/random.hpp"
#include "support/oracles.hpp"

namespace circq {
namespace {

ComplexMatrix sigma1() {
  ComplexMatrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

TEST(CyclicIndex, PlusMinusAreInverse) {
  for (std::size_t d = 1; d <= 6; ++d)
    for (std::int64_t a = 0; a < (std::int64_t)d; ++a)
      for (std::int64_t k = -13; k <= 13; ++k) {
        CyclicIndex i(d, a);
        EXPECT_EQ((i + k) - k, i);
      }
  EXPECT_EQ(CyclicIndex::from_one_based(4, 4).value(), 3u);
  EXPECT_EQ(CyclicIndex(4, -1).one_based(), 4u);
  EXPECT_THROW(CyclicIndex(0, 0), DimensionError);
}

TEST(CyclicShift, SmallCases) {
  EXPECT_EQ(cyclic_shift_power(3, 0), ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(cyclic_shift_power(2, 1), sigma1());
  EXPECT_EQ(cyclic_shift_power(4, 5), cyclic_shift_power(4, 1));
  EXPECT_EQ(cyclic_shift_power(5, 5), ComplexMatrix::Identity(5, 5));
  EXPECT_THROW(cyclic_shift_power(0, 1), DimensionError);
}

TEST(CyclicShift, MatchesColumnActionOracle) {
  for (std::size_t d = 1; d <= 7; ++d)
    for (long long k = -8; k <= 8; ++k) EXPECT_EQ(cyclic_shift_power(d, k), oracle::shift(d, k));
}

TEST(CyclicShift, GroupLawAndInverse) {
  for (std::size_t d = 1; d <= 6; ++d)
    for (std::int64_t a = -7; a <= 7; ++a) {
      const ComplexMatrix pa = cyclic_shift_power(d, a);
      EXPECT_EQ(pa.transpose(), cyclic_shift_power(d, -a));
      EXPECT_EQ(pa * pa.transpose(), ComplexMatrix::Identity(d, d));
      for (std::int64_t b = -7; b <= 7; ++b)
        EXPECT_EQ(pa * cyclic_shift_power(d, b), cyclic_shift_power(d, a + b));
    }
}

TEST(Circulant, FromCoefficients) {
  ComplexVector c(4);
  c << 1.0, Complex(2, 1), 3.0, Complex(0, -4);
  const ComplexMatrix m = circulant_from_coeffs({c});
  for (int r = 0; r < 4; ++r)
    for (int k = 0; k < 4; ++k) EXPECT_EQ(m(r, (r + k) % 4), c(k));
  EXPECT_EQ(m(1, 0), c(3));
  EXPECT_EQ(m(1, 1), c(0));

  ComplexVector e(3);
  e << 1.0, 0.0, 0.0;
  EXPECT_EQ(circulant_from_coeffs({e}), ComplexMatrix::Identity(3, 3));
  e << 0.0, 1.0, 0.0;
  EXPECT_EQ(circulant_from_coeffs({e}), cyclic_shift_power(3, 1));
  EXPECT_THROW(circulant_from_coeffs({ComplexVector()}), DimensionError);
}

TEST(Circulant, Predicate) {
  EXPECT_TRUE(is_circulant(ComplexMatrix::Identity(3, 3), 1e-12));
  ComplexMatrix x(2, 2);
  x << 1, 2, 3, 1;
  EXPECT_FALSE(is_circulant(x, 1e-12));
  EXPECT_THROW(is_circulant(ComplexMatrix::Zero(2, 3)), ShapeError);

  Rng rng(7);
  for (std::size_t d = 1; d <= 8; ++d) {
    const ComplexVector c = random_ginibre(d, 1, rng).col(0);
    EXPECT_TRUE(is_circulant(circulant_from_coeffs({c}), 1e-14));
  }
}

TEST(Dft, UnitaryAndDiagonalisesShift) {
  EXPECT_NEAR(std::abs(dft_matrix(1)(0, 0) - 1.0), 0.0, 1e-15);
  ComplexMatrix h(2, 2);
  h << 1, 1, 1, -1;
  EXPECT_LE(oracle::max_abs(dft_matrix(2) - h / std::sqrt(2.0)), 1e-15);
  for (std::size_t d = 1; d <= 64; ++d) {
    const ComplexMatrix f = dft_matrix(d);
    EXPECT_LE(oracle::max_abs(f * f.adjoint() - ComplexMatrix::Identity(d, d)), 1e-12) << d;
    if (d <= 16) {
      const ComplexMatrix p = f * omega_power_diag(d, 1) * f.adjoint();
      EXPECT_LE(oracle::max_abs(p - cyclic_shift_power(d, 1)), 1e-12) << d;
    }
  }
  EXPECT_THROW(dft_matrix(0), DimensionError);
}

TEST(Dft, OmegaPowers) {
  for (std::size_t d = 1; d <= 6; ++d) {
    EXPECT_LE(oracle::max_abs(omega_power_diag(d, 0) - ComplexMatrix::Identity(d, d)), 1e-15);
    EXPECT_LE(oracle::max_abs(omega_power_diag(d, (std::int64_t)d) -
                              ComplexMatrix::Identity(d, d)),
              1e-15);
  }
  const ComplexMatrix o = omega_power_diag(2, 1);
  EXPECT_NEAR(std::abs(o(1, 1) + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(o(0, 0) - 1.0), 0.0, 1e-15);
}

TEST(Vec, RowMajorConvention) {
  ComplexVector expect(4);
  expect << 1, 0, 0, 1;
  EXPECT_EQ(vec(ComplexMatrix::Identity(2, 2)), expect);
  ComplexMatrix e = ComplexMatrix::Zero(2, 2);
  e(0, 1) = 1.0;
  expect << 0, 1, 0, 0;
  EXPECT_EQ(vec(e), expect);

  Rng rng(11);
  const ComplexMatrix a = random_ginibre(3, 3, rng);
  const ComplexMatrix x = random_ginibre(3, 3, rng);
  const ComplexMatrix b = random_ginibre(3, 3, rng);
  EXPECT_LE((kron(a, b.transpose()) * vec(x) - vec(a * x * b)).cwiseAbs().maxCoeff(), 1e-12);

  const ComplexMatrix y = random_ginibre(2, 5, rng);
  EXPECT_EQ(unvec(vec(y), 2, 5), y);
  EXPECT_EQ(vec(y), oracle::row_major_vec(y));
  EXPECT_THROW(unvec(vec(y), 3, 3), ShapeError);
}

TEST(Kron, Conventions) {
  EXPECT_EQ(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)),
            ComplexMatrix::Identity(4, 4));
  const ComplexMatrix s = kron(sigma1(), ComplexMatrix::Identity(2, 2));
  EXPECT_EQ(s.block(0, 2, 2, 2), ComplexMatrix::Identity(2, 2));
  EXPECT_EQ(s.block(2, 0, 2, 2), ComplexMatrix::Identity(2, 2));
  EXPECT_EQ(s.block(0, 0, 2, 2), ComplexMatrix::Zero(2, 2));

  // P (x) P at d = 2 swaps |00> <-> |11> and |01> <-> |10>.
  const ComplexMatrix pp = kron(cyclic_shift_power(2, 1), cyclic_shift_power(2, 1));
  ComplexMatrix expect = ComplexMatrix::Zero(4, 4);
  expect(0, 3) = expect(3, 0) = expect(1, 2) = expect(2, 1) = 1.0;
  EXPECT_EQ(pp, expect);

  Rng rng(3);
  const ComplexMatrix a = random_ginibre(2, 3, rng);
  const ComplexMatrix b = random_ginibre(4, 2, rng);
  EXPECT_LE(oracle::max_abs(kron(a, b) - oracle::kron(a, b)), 1e-15);
}

TEST(PartialTrace, ProductAndIdentity) {
  Rng rng(5);
  const ComplexMatrix ra = random_density_matrix(2, rng).matrix();
  const ComplexMatrix rb = random_density_matrix(3, rng).matrix();
  const BipartiteOperator prod(kron(ra, rb), 2, 3);
  EXPECT_LE(oracle::max_abs(partial_trace(prod, Subsystem::A) - rb), 1e-14);
  EXPECT_LE(oracle::max_abs(partial_trace(prod, Subsystem::B) - ra), 1e-14);

  const BipartiteOperator id(ComplexMatrix::Identity(6, 6), 2, 3);
  EXPECT_EQ(partial_trace(id, Subsystem::A), 2.0 * ComplexMatrix::Identity(3, 3));

  const ComplexVector v = vec(ComplexMatrix::Identity(2, 2));
  const BipartiteOperator omega(v * v.adjoint(), 2, 2);
  EXPECT_EQ(partial_trace(omega, Subsystem::A), ComplexMatrix::Identity(2, 2));
}

TEST(PartialTrace, MatchesIndexOracle) {
  Rng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix x = random_ginibre(6, 6, rng);
    const BipartiteOperator op(x, 2, 3);
    EXPECT_LE(oracle::max_abs(partial_trace(op, Subsystem::A) - oracle::partial_trace(x, 2, 3, true)),
              1e-14);
    EXPECT_LE(oracle::max_abs(partial_trace(op, Subsystem::B) - oracle::partial_trace(x, 2, 3, false)),
              1e-14);
    EXPECT_NEAR(std::abs(partial_trace(op, Subsystem::A).trace() - x.trace()), 0.0, 1e-13);
  }
}

TEST(PartialTranspose, ProductRuleAndInvolution) {
  Rng rng(23);
  const ComplexMatrix a = random_ginibre(2, 2, rng);
  const ComplexMatrix b = random_ginibre(3, 3, rng);
  const BipartiteOperator ab(kron(a, b), 2, 3);
  EXPECT_LE(oracle::max_abs(partial_transpose(ab, Subsystem::B).matrix() - kron(a, b.transpose())),
            1e-15);
  EXPECT_LE(oracle::max_abs(partial_transpose(ab, Subsystem::A).matrix() - kron(a.transpose(), b)),
            1e-15);

  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix x = random_ginibre(6, 6, rng);
    const BipartiteOperator op(x, 2, 3);
    EXPECT_EQ(partial_transpose(partial_transpose(op, Subsystem::B), Subsystem::B).matrix(), x);
    EXPECT_LE(oracle::max_abs(partial_transpose(op, Subsystem::A).matrix() -
                              oracle::partial_transpose(x, 2, 3, true)),
              1e-14);
    EXPECT_LE(oracle::max_abs(partial_transpose(op, Subsystem::B).matrix() -
                              oracle::partial_transpose(x, 2, 3, false)),
              1e-14);
    const BipartiteOperator xt(x.transpose(), 2, 3);
    EXPECT_EQ(partial_transpose(op, Subsystem::A).matrix(),
              partial_transpose(xt, Subsystem::B).matrix());
  }
}

TEST(PartialTranspose, SwapSpectrum) {
  const ComplexVector v = vec(ComplexMatrix::Identity(2, 2));
  const BipartiteOperator omega(v * v.adjoint() / 2.0, 2, 2);
  const RealVector e = hermitian_spectrum(partial_transpose(omega, Subsystem::B).matrix());
  EXPECT_NEAR(e(0), -0.5, 1e-14);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(e(k), 0.5, 1e-14);
}

TEST(Bipartite, DimensionMismatch) {
  EXPECT_THROW(BipartiteOperator(ComplexMatrix::Zero(6, 6), 2, 2), ShapeError);
  EXPECT_THROW(BipartiteOperator(ComplexMatrix::Zero(0, 0), 0, 2), DimensionError);
}

TEST(HermitianSpectrum, BasicCases) {
  const RealVector one = hermitian_spectrum(ComplexMatrix::Identity(3, 3));
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(one(k), 1.0, 1e-15);
  const RealVector s = hermitian_spectrum(sigma1());
  EXPECT_NEAR(s(0), -1.0, 1e-15);
  EXPECT_NEAR(s(1), 1.0, 1e-15);

  Rng rng(29);
  for (std::size_t d = 1; d <= 8; ++d) {
    const ComplexMatrix g = random_ginibre(d, d, rng);
    const ComplexMatrix h = g + g.adjoint();
    EXPECT_NEAR(hermitian_spectrum(h).sum(), h.trace().real(), 1e-10 * (double)d);
  }
  ComplexMatrix bad = sigma1();
  bad(0, 1) = 2.0;
  EXPECT_THROW(hermitian_spectrum(bad), DomainError);
}

TEST(Random, DensityMatricesAreStates) {
  Rng rng(31);
  for (std::size_t d = 1; d <= 6; ++d) {
    const ComplexMatrix rho = random_density_matrix(d, rng).matrix();
    EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
    EXPECT_GE(hermitian_spectrum(rho)(0), -1e-12);
  }
  EXPECT_EQ(random_density_matrix(4, 42).matrix(), random_density_matrix(4, 42).matrix());
  EXPECT_LE(oracle::max_abs(random_density_matrix(1, 9).matrix() - ComplexMatrix::Ones(1, 1)),
            1e-15);
}

TEST(Random, UnitariesAndProbabilities) {
  Rng rng(37);
  for (std::size_t d = 1; d <= 6; ++d) {
    const ComplexMatrix u = random_unitary(d, rng);
    EXPECT_LE(oracle::max_abs(u * u.adjoint() - ComplexMatrix::Identity(d, d)), 1e-12);
    EXPECT_NEAR(random_unit_vector(d, rng).norm(), 1.0, 1e-14);
    const auto p = random_probability_vector(d, rng);
    double sum = 0;
    for (double v : p) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-14);
  }
}

TEST(DensityMatrix, Validation) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::Identity(2, 2)), DomainError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::Zero(2, 3)), ShapeError);
  ComplexMatrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  EXPECT_THROW(DensityMatrix{neg}, DomainError);
  ComplexMatrix nan = ComplexMatrix::Identity(2, 2) / 2.0;
  nan(0, 1) = std::nan("");
  EXPECT_THROW(DensityMatrix{nan}, DomainError);
  ComplexVector psi(2);
  psi << 1.0, Complex(0, 1);
  EXPECT_THROW(DensityMatrix::from_pure(psi), DomainError);
  psi /= std::sqrt(2.0);
  EXPECT_NEAR(DensityMatrix::from_pure(psi).matrix()(0, 1).imag(), -0.5, 1e-15);
}

}  // namespace
}  // namespace circq

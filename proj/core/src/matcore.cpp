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

#include "circq/matcore.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "circq/density_matrix.hpp"
#include "circq/errors.hpp"

namespace circq {

namespace {

void require_dim(std::size_t d, const char* what) {
  if (d == 0) {
    throw DimensionError(std::string(what) + ": dimension must be at least 1");
  }
}

void require_bipartite(const ComplexMatrix& m, std::size_t dA, std::size_t dB) {
  if (dA == 0 || dB == 0) {
    throw DimensionError("bipartite operator: subsystem dimensions must be >= 1");
  }
  const auto n = static_cast<Eigen::Index>(dA * dB);
  if (m.rows() != n || m.cols() != n) {
    throw ShapeError("bipartite operator: matrix is " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + " but dA*dB = " +
                     std::to_string(n));
  }
}

}  // namespace

CyclicIndex::CyclicIndex(std::size_t d, std::int64_t value) : dim_(d), value_(0) {
  require_dim(d, "CyclicIndex");
  value_ = mod_dim(value, d);
}

BipartiteOperator::BipartiteOperator(ComplexMatrix matrix, std::size_t dA,
                                     std::size_t dB)
    : matrix_(std::move(matrix)), dA_(dA), dB_(dB) {
  require_bipartite(matrix_, dA_, dB_);
}

std::size_t require_square(const ComplexMatrix& x, const char* what) {
  if (x.rows() != x.cols() || x.rows() == 0) {
    throw ShapeError(std::string(what) + ": expected a non-empty square matrix, got " +
                     std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  return static_cast<std::size_t>(x.rows());
}

ComplexMatrix cyclic_shift_power(std::size_t d, std::int64_t k) {
  require_dim(d, "cyclic_shift_power");
  const std::size_t shift = mod_dim(k, d);
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    p((Eigen::Index)i, (Eigen::Index)((i + shift) % d)) = 1.0;
  }
  return p;
}

ComplexMatrix circulant_from_coeffs(const CirculantCoefficients& coeffs) {
  const std::size_t d = coeffs.dim();
  require_dim(d, "circulant_from_coeffs");
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      out((Eigen::Index)i, (Eigen::Index)((i + k) % d)) = coeffs.c((Eigen::Index)k);
    }
  }
  return out;
}

bool is_circulant(const ComplexMatrix& x, double tol) {
  const std::size_t d = require_square(x, "is_circulant");
  for (std::size_t k = 0; k < d; ++k) {
    const Complex ref = x(0, (Eigen::Index)k);
    for (std::size_t i = 1; i < d; ++i) {
      if (std::abs(x((Eigen::Index)i, (Eigen::Index)((i + k) % d)) - ref) > tol) {
        return false;
      }
    }
  }
  return true;
}

ComplexMatrix dft_matrix(std::size_t d) {
  require_dim(d, "dft_matrix");
  ComplexMatrix f(d, d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      // Reduce the exponent first so large d keeps full phase accuracy.
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>((j * k) % d) / static_cast<double>(d);
      f((Eigen::Index)j, (Eigen::Index)k) = std::polar(norm, angle);
    }
  }
  return f;
}

ComplexMatrix omega_power_diag(std::size_t d, std::int64_t k) {
  require_dim(d, "omega_power_diag");
  const std::size_t kk = mod_dim(k, d);
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>((j * kk) % d) / static_cast<double>(d);
    out((Eigen::Index)j, (Eigen::Index)j) = std::polar(1.0, angle);
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& x) {
  ComplexVector v(x.size());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      v(i * x.cols() + j) = x(i, j);
    }
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector& v, std::size_t rows, std::size_t cols) {
  if (static_cast<std::size_t>(v.size()) != rows * cols) {
    throw ShapeError("unvec: vector length " + std::to_string(v.size()) +
                     " does not match " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
  ComplexMatrix x(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      x((Eigen::Index)i, (Eigen::Index)j) = v((Eigen::Index)(i * cols + j));
    }
  }
  return x;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const BipartiteOperator& x, Subsystem over) {
  const std::size_t dA = x.dA();
  const std::size_t dB = x.dB();
  const ComplexMatrix& m = x.matrix();
  if (over == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(dB, dB);
    for (std::size_t i = 0; i < dA; ++i) {
      out += m.block(i * dB, i * dB, dB, dB);
    }
    return out;
  }
  ComplexMatrix out(dA, dA);
  for (std::size_t i = 0; i < dA; ++i) {
    for (std::size_t j = 0; j < dA; ++j) {
      out((Eigen::Index)i, (Eigen::Index)j) = m.block(i * dB, j * dB, dB, dB).trace();
    }
  }
  return out;
}

BipartiteOperator partial_transpose(const BipartiteOperator& x, Subsystem on) {
  const std::size_t dA = x.dA();
  const std::size_t dB = x.dB();
  const ComplexMatrix& m = x.matrix();
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dA; ++i) {
    for (std::size_t j = 0; j < dA; ++j) {
      // Block (i, j) holds <i| X |j> as an operator on B.
      if (on == Subsystem::B) {
        out.block(i * dB, j * dB, dB, dB) = m.block(i * dB, j * dB, dB, dB).transpose();
      } else {
        out.block(i * dB, j * dB, dB, dB) = m.block(j * dB, i * dB, dB, dB);
      }
    }
  }
  return BipartiteOperator(std::move(out), dA, dB);
}

double max_abs(const ComplexMatrix& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& x, double tol) {
  if (x.rows() != x.cols()) return false;
  return max_abs(x - x.adjoint()) <= tol * (1.0 + max_abs(x));
}

RealVector hermitian_spectrum(const ComplexMatrix& x) {
  require_square(x, "hermitian_spectrum");
  if (!is_hermitian(x)) {
    throw DomainError("hermitian_spectrum: input is not Hermitian (deviation " +
                      std::to_string(max_abs(x - x.adjoint())) + ")");
  }
  const ComplexMatrix h = 0.5 * (x + x.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DomainError("hermitian_spectrum: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double tol)
    : matrix_(std::move(matrix)) {
  require_square(matrix_, "DensityMatrix");
  if (!matrix_.allFinite()) {
    throw DomainError("DensityMatrix: non-finite entry");
  }
  if (!is_hermitian(matrix_, tol)) {
    throw DomainError("DensityMatrix: matrix is not Hermitian");
  }
  const double trace_dev = std::abs(matrix_.trace() - Complex(1.0, 0.0));
  if (trace_dev > tol) {
    throw DomainError("DensityMatrix: trace differs from 1 by " +
                      std::to_string(trace_dev));
  }
  const double min_eig = hermitian_spectrum(matrix_)(0);
  if (min_eig < -tol) {
    throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector& psi, double tol) {
  if (psi.size() == 0) {
    throw DimensionError("DensityMatrix::from_pure: empty vector");
  }
  if (std::abs(psi.norm() - 1.0) > tol) {
    throw DomainError("DensityMatrix::from_pure: vector is not normalised");
  }
  return DensityMatrix(psi * psi.adjoint(), tol);
}

}  // namespace circq

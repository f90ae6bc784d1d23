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

#include "circq/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circq/channels.hpp"
#include "circq/errors.hpp"

namespace circq {

namespace {

const double kSqrt3 = std::sqrt(3.0);

}  // namespace

NormSelector norm_selector_from_int(int p) {
  switch (p) {
    case 1:
      return NormSelector::L1;
    case 2:
      return NormSelector::L2;
    default:
      throw DomainError("norm selector must be 1 or 2, got " + std::to_string(p));
  }
}

double lp_coherence(const ComplexMatrix& x, NormSelector p) {
  const std::size_t d = require_square(x, "lp_coherence");
  double sum = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      const double mag = std::abs(x((Eigen::Index)i, (Eigen::Index)j));
      sum += p == NormSelector::L1 ? mag : mag * mag;
    }
  }
  return sum;
}

double l1_coherence(const DensityMatrix& rho) {
  return lp_coherence(rho.matrix(), NormSelector::L1);
}

double l2_coherence(const DensityMatrix& rho) {
  return lp_coherence(rho.matrix(), NormSelector::L2);
}

bool is_incoherent(const DensityMatrix& rho, double tol) {
  const ComplexMatrix& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > tol) return false;
    }
  }
  return true;
}

CoherenceReport coherence_report(const DensityMatrix& rho, NormSelector p) {
  const ComplexMatrix& m = rho.matrix();
  return CoherenceReport{
      p,
      lp_coherence(m, p),
      lp_coherence(apply_uniform(m), p),
      lp_coherence(mixed_permutation_apply(m), p),
  };
}

const std::array<ComplexMatrix, 8>& gell_mann_basis() {
  static const std::array<ComplexMatrix, 8> basis = [] {
    const Complex i(0.0, 1.0);
    std::array<ComplexMatrix, 8> g;
    for (auto& m : g) m = ComplexMatrix::Zero(3, 3);
    g[0](0, 1) = 1.0;
    g[0](1, 0) = 1.0;
    g[1](0, 1) = -i;
    g[1](1, 0) = i;
    g[2](0, 0) = 1.0;
    g[2](1, 1) = -1.0;
    g[3](0, 2) = 1.0;
    g[3](2, 0) = 1.0;
    g[4](0, 2) = -i;
    g[4](2, 0) = i;
    g[5](1, 2) = 1.0;
    g[5](2, 1) = 1.0;
    g[6](1, 2) = -i;
    g[6](2, 1) = i;
    g[7](0, 0) = 1.0 / kSqrt3;
    g[7](1, 1) = 1.0 / kSqrt3;
    g[7](2, 2) = -2.0 / kSqrt3;
    return g;
  }();
  return basis;
}

ComplexMatrix qutrit_from_bloch(const GellMannVector& r) {
  const auto& g = gell_mann_basis();
  ComplexMatrix rho = ComplexMatrix::Identity(3, 3);
  for (std::size_t a = 0; a < 8; ++a) {
    rho += kSqrt3 * r[a] * g[a];
  }
  return rho / 3.0;
}

GellMannVector bloch_from_qutrit(const ComplexMatrix& rho) {
  if (rho.rows() != 3 || rho.cols() != 3) {
    throw ShapeError("bloch_from_qutrit: expected a 3x3 matrix");
  }
  if (!is_hermitian(rho)) {
    throw DomainError("bloch_from_qutrit: matrix is not Hermitian");
  }
  const auto& g = gell_mann_basis();
  GellMannVector r{};
  for (std::size_t a = 0; a < 8; ++a) {
    r[a] = 0.5 * kSqrt3 * (rho * g[a]).trace().real();
  }
  return r;
}

GellMannVector circulant_image_bloch(const GellMannVector& r) {
  const double s = r[0] + r[3] + r[5];
  const double t = r[1] - r[4] + r[6];
  return {s / 3.0, t / 3.0, 0.0, s / 3.0, -t / 3.0, s / 3.0, t / 3.0, 0.0};
}

ComplexVector example_state(double theta, double phi) {
  ComplexVector v(3);
  const double c = std::cos(theta);
  const double s = std::sin(theta) / std::sqrt(2.0);
  v << c, std::polar(s, phi), s;
  return v;
}

QutritCoherence qutrit_closed_forms(const GellMannVector& r, NormSelector p) {
  const double s = r[0] + r[3] + r[5];
  const double t = r[1] - r[4] + r[6];
  if (p == NormSelector::L1) {
    const double k = 2.0 / kSqrt3;
    return QutritCoherence{
        k * (std::hypot(r[0], r[1]) + std::hypot(r[3], r[4]) + std::hypot(r[5], r[6])),
        k * std::hypot(s, t),
        k * std::abs(s),
        s < 0.0,
    };
  }
  const double sq = r[0] * r[0] + r[1] * r[1] + r[3] * r[3] + r[4] * r[4] +
                    r[5] * r[5] + r[6] * r[6];
  return QutritCoherence{
      2.0 / 3.0 * sq,
      2.0 / 9.0 * (s * s + t * t),
      2.0 / 9.0 * s * s,
      false,
  };
}

std::vector<SweepRow> coherence_sweep(double phi, std::span<const double> theta_grid,
                                      NormSelector p) {
  if (theta_grid.empty()) {
    throw DomainError("coherence_sweep: empty theta grid");
  }
  std::vector<SweepRow> rows;
  rows.reserve(theta_grid.size());
  for (const double theta : theta_grid) {
    const DensityMatrix rho = DensityMatrix::from_pure(example_state(theta, phi));
    const QutritCoherence closed = qutrit_closed_forms(bloch_from_qutrit(rho.matrix()), p);
    const CoherenceReport generic = coherence_report(rho, p);
    const double dev = std::max({std::abs(closed.c_rho - generic.c_rho),
                                 std::abs(closed.c_phi - generic.c_phi),
                                 std::abs(closed.c_delta - generic.c_delta)});
    rows.push_back(SweepRow{theta, closed.c_rho, closed.c_phi, closed.c_delta, dev,
                            closed.delta_sign_differs});
  }
  return rows;
}

std::vector<double> inclusive_grid(double lo, double hi, std::size_t steps) {
  if (steps < 2) {
    throw DomainError("inclusive_grid: need at least 2 points, got " +
                      std::to_string(steps));
  }
  std::vector<double> grid(steps);
  const double step = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = lo + step * static_cast<double>(i);
  }
  grid.back() = hi;
  return grid;
}

}  // namespace circq

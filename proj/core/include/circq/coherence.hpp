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

// l1 / l2 coherence with respect to the computational basis, the bound chain
// C(rho) >= C(Phi(rho)) >= C(Delta(rho)), and the qutrit Gell-Mann
// parameterisation used to write those bounds in closed form.
//
// The "l2 coherence" here is the sum of squared off-diagonal moduli, with no
// square root.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "circq/density_matrix.hpp"
#include "circq/matcore.hpp"
#include "circq/tolerance.hpp"

namespace circq {

enum class NormSelector { L1 = 1, L2 = 2 };

// Maps 1 -> L1, 2 -> L2; anything else throws DomainError.
NormSelector norm_selector_from_int(int p);

// Gell-Mann coordinates (r_1, ..., r_8), stored 0-based.
using GellMannVector = std::array<double, 8>;

struct CoherenceReport {
  NormSelector p;
  double c_rho;
  double c_phi;
  double c_delta;
};

// Off-diagonal sum for an arbitrary square matrix.
double lp_coherence(const ComplexMatrix& x, NormSelector p);

double l1_coherence(const DensityMatrix& rho);
double l2_coherence(const DensityMatrix& rho);

bool is_incoherent(const DensityMatrix& rho, double tol = tol::kStructural);

CoherenceReport coherence_report(const DensityMatrix& rho, NormSelector p);

// Standard ordering: G_1, G_2 on the (0,1) pair (symmetric, antisymmetric),
// G_3 diagonal, G_4, G_5 on (0,2), G_6, G_7 on (1,2), G_8 diagonal.
const std::array<ComplexMatrix, 8>& gell_mann_basis();

// (1/3)(1 + sqrt(3) r . G). Unit trace and Hermitian; not necessarily PSD.
ComplexMatrix qutrit_from_bloch(const GellMannVector& r);

// r_i = (sqrt(3)/2) Tr(rho G_i). Throws ShapeError unless 3x3 and
// DomainError unless Hermitian.
GellMannVector bloch_from_qutrit(const ComplexMatrix& rho);

// Bloch vector of Phi(rho): (s, t, 0, s, -t, s, t, 0) / 3 with
// s = r_1 + r_4 + r_6 and t = r_2 - r_5 + r_7.
GellMannVector circulant_image_bloch(const GellMannVector& r);

// cos(theta)|0> + sin(theta)/sqrt(2) e^{i phi}|1> + sin(theta)/sqrt(2)|2>.
ComplexVector example_state(double theta, double phi);

struct QutritCoherence {
  double c_rho;
  double c_phi;
  double c_delta;
  // Set when the signed form (2/sqrt3) s of C_l1(Delta(rho)) would be negative,
  // i.e. where the absolute value matters.
  bool delta_sign_differs;
};

// The three coherence values of a qutrit written in Gell-Mann coordinates.
QutritCoherence qutrit_closed_forms(const GellMannVector& r, NormSelector p);

struct SweepRow {
  double theta;
  double c_rho;
  double c_phi;
  double c_delta;
  // Largest gap between the closed forms and the generic evaluation.
  double max_deviation;
  bool delta_sign_differs;
};

// One row per theta for rho = |phi(theta, phi)><phi(theta, phi)|. Values are
// the closed forms; each row records its deviation from coherence_report.
// Throws DomainError on an empty grid.
std::vector<SweepRow> coherence_sweep(double phi, std::span<const double> theta_grid,
                                      NormSelector p);

// steps points spanning [lo, hi] inclusive; steps >= 2.
std::vector<double> inclusive_grid(double lo, double hi, std::size_t steps);

}  // namespace circq

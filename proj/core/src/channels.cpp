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

#include "circq/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "circq/errors.hpp"

namespace circq {

namespace {

void require_matching(const ChannelWeights& w, const ComplexMatrix& x,
                      const char* what) {
  const auto d = static_cast<Eigen::Index>(w.dim());
  if (x.rows() != d || x.cols() != d) {
    throw ShapeError(std::string(what) + ": weights have dimension " +
                     std::to_string(d) + " but the matrix is " +
                     std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

std::vector<ComplexMatrix> shift_powers(std::size_t d) {
  std::vector<ComplexMatrix> powers;
  powers.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    powers.push_back(cyclic_shift_power(d, static_cast<std::int64_t>(k)));
  }
  return powers;
}

}  // namespace

ChannelWeights::ChannelWeights(std::vector<double> lambda) : lambda_(std::move(lambda)) {
  if (lambda_.empty()) {
    throw DimensionError("ChannelWeights: empty weight vector");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < lambda_.size(); ++k) {
    const double v = lambda_[k];
    if (!std::isfinite(v)) {
      throw DomainError("ChannelWeights: weight " + std::to_string(k) + " is not finite");
    }
    if (v < -tol::kWeights) {
      throw DomainError("ChannelWeights: weight " + std::to_string(k) +
                        " is negative (" + std::to_string(v) + ")");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > tol::kWeights) {
    throw DomainError("ChannelWeights: weights sum to " + std::to_string(total) +
                      ", expected 1");
  }
  total = 0.0;
  for (auto& v : lambda_) {
    v = std::max(v, 0.0);
    total += v;
  }
  for (auto& v : lambda_) v /= total;
}

ChannelWeights ChannelWeights::uniform(std::size_t d) {
  if (d == 0) throw DimensionError("ChannelWeights::uniform: dimension must be >= 1");
  ChannelWeights w;
  w.lambda_.assign(d, 1.0 / static_cast<double>(d));
  return w;
}

ChannelWeights ChannelWeights::identity(std::size_t d) {
  if (d == 0) throw DimensionError("ChannelWeights::identity: dimension must be >= 1");
  ChannelWeights w;
  w.lambda_.assign(d, 0.0);
  w.lambda_[0] = 1.0;
  return w;
}

bool ChannelWeights::is_uniform(double tol) const {
  const double u = 1.0 / static_cast<double>(dim());
  return std::all_of(lambda_.begin(), lambda_.end(),
                     [&](double v) { return std::abs(v - u) <= tol; });
}

ComplexMatrix apply_kraus(const ChannelWeights& w, const ComplexMatrix& x) {
  require_matching(w, x, "apply_kraus");
  const std::size_t d = w.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    if (w[k] == 0.0) continue;
    const ComplexMatrix p = cyclic_shift_power(d, static_cast<std::int64_t>(k));
    out.noalias() += w[k] * (p * x * p.transpose());
  }
  return out;
}

ComplexMatrix apply_closed_form(const ChannelWeights& w, const ComplexMatrix& x) {
  require_matching(w, x, "apply_closed_form");
  const std::size_t d = w.dim();
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      // M = P^{-j} Lambda P^{i} has one nonzero per row: M[a, a - j + i] =
      // lambda_{a - j}. Tr(M X) = sum_a M[a, b(a)] X[b(a), a].
      Complex tr = 0.0;
      for (std::size_t a = 0; a < d; ++a) {
        const std::size_t row_weight = (a + d - j) % d;
        const std::size_t b = (row_weight + i) % d;
        tr += w[row_weight] * x((Eigen::Index)b, (Eigen::Index)a);
      }
      out((Eigen::Index)i, (Eigen::Index)j) = tr;
    }
  }
  return out;
}

CirculantCoefficients circulant_coeffs_of_image(const ComplexMatrix& x) {
  const std::size_t d = require_square(x, "circulant_coeffs_of_image");
  CirculantCoefficients coeffs{ComplexVector::Zero(d)};
  for (std::size_t k = 0; k < d; ++k) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      sum += x((Eigen::Index)i, (Eigen::Index)((i + k) % d));
    }
    coeffs.c((Eigen::Index)k) = sum / static_cast<double>(d);
  }
  return coeffs;
}

ComplexMatrix apply_uniform(const ComplexMatrix& x) {
  return circulant_from_coeffs(circulant_coeffs_of_image(x));
}

ComplexMatrix apply_adjoint(const ChannelWeights& w, const ComplexMatrix& x) {
  require_matching(w, x, "apply_adjoint");
  const std::size_t d = w.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    if (w[k] == 0.0) continue;
    const ComplexMatrix p = cyclic_shift_power(d, static_cast<std::int64_t>(k));
    out.noalias() += w[k] * (p.transpose() * x * p);
  }
  return out;
}

ComplexMatrix natural_representation(const ChannelWeights& w) {
  const std::size_t d = w.dim();
  ComplexMatrix k = ComplexMatrix::Zero(d * d, d * d);
  const auto powers = shift_powers(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (w[j] == 0.0) continue;
    k += w[j] * kron(powers[j], powers[j]);
  }
  return k;
}

ChannelSpectrumReport channel_spectrum(const ChannelWeights& w) {
  const ComplexMatrix k = natural_representation(w);
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(k, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw DomainError("channel_spectrum: eigensolver did not converge");
  }
  ChannelSpectrumReport report;
  const ComplexVector& ev = solver.eigenvalues();
  report.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const Complex& a, const Complex& b) {
              if (a.real() != b.real()) return a.real() > b.real();
              return a.imag() > b.imag();
            });
  if (w.is_uniform()) {
    std::size_t ones = 0;
    std::size_t zeros = 0;
    for (const Complex& z : report.eigenvalues) {
      if (std::abs(z - 1.0) <= tol::kSpectral) ++ones;
      if (std::abs(z) <= tol::kSpectral) ++zeros;
    }
    report.multiplicity_of_one = ones;
    report.multiplicity_of_zero = zeros;
  }
  return report;
}

BipartiteOperator choi(const ChannelWeights& w) {
  const std::size_t d = w.dim();
  ComplexMatrix j = ComplexMatrix::Zero(d * d, d * d);
  for (std::size_t k = 0; k < d; ++k) {
    if (w[k] == 0.0) continue;
    const ComplexVector v = vec(cyclic_shift_power(d, static_cast<std::int64_t>(k)));
    j.noalias() += w[k] * (v * v.adjoint());
  }
  return BipartiteOperator(std::move(j), d, d);
}

AlphaCoefficients alpha_coefficients(const ChannelWeights& w) {
  const std::size_t d = w.dim();
  AlphaCoefficients out;
  out.alpha.resize(d);
  for (std::size_t mu = 0; mu < d; ++mu) {
    Complex sum = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>((k * mu) % d) / static_cast<double>(d);
      sum += w[k] * std::polar(1.0, angle);
    }
    out.alpha[mu] = sum / static_cast<double>(d);
  }
  return out;
}

RealVector choi_pt_spectrum(const ChannelWeights& w) {
  const BipartiteOperator j = choi(w);
  const BipartiteOperator state(j.matrix() / static_cast<double>(w.dim()), j.dA(), j.dB());
  return hermitian_spectrum(partial_transpose(state, Subsystem::B).matrix());
}

RealVector predicted_choi_pt_spectrum(const ChannelWeights& w) {
  const std::size_t d = w.dim();
  const AlphaCoefficients a = alpha_coefficients(w);
  std::vector<double> values;
  values.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) values.push_back(a.alpha[0].real());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const double mag = std::abs(a.alpha[(i + d - j) % d]);
      values.push_back(mag);
      values.push_back(-mag);
    }
  }
  std::sort(values.begin(), values.end());
  return Eigen::Map<RealVector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

bool is_entanglement_breaking(const ChannelWeights& w, double tol) {
  const AlphaCoefficients a = alpha_coefficients(w);
  double worst = 0.0;
  for (std::size_t mu = 1; mu < a.dim(); ++mu) {
    worst = std::max(worst, std::abs(a.alpha[mu]));
  }
  return worst <= tol;
}

ChoiSeparableForm choi_separable_form(std::size_t d) {
  const ComplexMatrix f = dft_matrix(d);
  ChoiSeparableForm form;
  form.local_unitary = kron(f, f.conjugate());
  form.core = ComplexMatrix::Zero(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto ii = static_cast<Eigen::Index>(i * d + i);
    form.core(ii, ii) = 1.0;
  }
  return form;
}

ComplexMatrix mixed_permutation_apply(const ComplexMatrix& x) {
  const std::size_t d = require_square(x, "mixed_permutation_apply");
  if (d == 1) return x;
  const Complex trace = x.trace();
  const Complex off_diag_sum = x.sum() - trace;
  const Complex a = trace / static_cast<double>(d);
  const Complex b = off_diag_sum / static_cast<double>(d * (d - 1));
  ComplexMatrix out = ComplexMatrix::Constant(d, d, b);
  out.diagonal().setConstant(a);
  return out;
}

}  // namespace circq

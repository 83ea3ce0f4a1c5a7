// Copyright 2026 The qht Authors
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

#include "qht/modular.hpp"

#include <cmath>

namespace qht {

ModularSpectrum::ModularSpectrum(const StatePair& pair)
    : dim_(pair.dim()),
      lambdas_(pair.rho.eig().values),
      mus_(pair.sigma.eig().values),
      basis_rho_(pair.rho.eig().vectors),
      basis_sigma_(pair.sigma.eig().vectors),
      overlaps_(basis_rho_.adjoint() * basis_sigma_) {}

Matrix project_omega_sigma(const ModularSpectrum& spec, double eps) {
  if (eps <= 0.0) throw invalid_input("project_omega_sigma: eps must be positive");
  const int n = spec.dim();
  Matrix out = Matrix::Zero(n, n);
  for (int y = 0; y < n; ++y) {
    const double mu = spec.mus()[y];
    const double sqrt_mu = std::sqrt(mu);
    for (int x = 0; x < n; ++x) {
      if (!leq_band(spec.lambdas()[x], eps * mu)) continue;
      out += (sqrt_mu * spec.overlaps()(x, y)) * spec.basis_rho().col(x) *
             spec.basis_sigma().col(y).adjoint();
    }
  }
  return out;
}

AtomicMeasure spectral_distribution(const ModularSpectrum& spec, Reference ref,
                                    double merge_tol) {
  const int n = spec.dim();
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const double w = (ref == Reference::Sigma) ? spec.weight_sigma(x, y)
                                                 : spec.weight_rho(x, y);
      if (w == 0.0) continue;
      atoms.push_back({std::log(spec.ratio(x, y)), w});
    }
  return AtomicMeasure(std::move(atoms), 1.0, 0.0, merge_tol);
}

double verify_modular_relation(const StatePair& pair, const Matrix& x) {
  if (x.rows() != pair.dim() || x.cols() != pair.dim())
    throw invalid_input("verify_modular_relation: dimension mismatch");
  const Matrix sqrt_rho =
      pair.rho.apply([](double v) { return std::sqrt(v); }).matrix();
  const Matrix sqrt_sigma =
      pair.sigma.apply([](double v) { return std::sqrt(v); }).matrix();
  const Matrix inv_sqrt_sigma =
      pair.sigma.apply([](double v) { return 1.0 / std::sqrt(v); }).matrix();

  // Delta^{1/2}(Y) = rho^{1/2} Y sigma^{-1/2}, J(Y) = Y^*.
  const Matrix lhs =
      (sqrt_rho * (x * sqrt_sigma) * inv_sqrt_sigma).adjoint();
  const Matrix rhs = x.adjoint() * sqrt_rho;
  return max_abs(lhs - rhs);
}

}  // namespace qht

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

#pragma once

#include "qht/measure.hpp"
#include "qht/states.hpp"

namespace qht {

enum class Reference { Sigma, Rho };

/// Spectral data of the relative modular operator X -> rho X sigma^{-1}
/// on Hilbert-Schmidt space, kept in factored form: its eigenvalues are
/// the ratios lambda_x / mu_y with eigenvectors |a_x><b_y|, so everything
/// downstream is a function of the two spectra and the basis overlaps.
class ModularSpectrum {
 public:
  explicit ModularSpectrum(const StatePair& pair);

  int dim() const { return dim_; }
  const RealVector& lambdas() const { return lambdas_; }
  const RealVector& mus() const { return mus_; }
  /// overlaps(x, y) = <a_x | b_y>.
  const Matrix& overlaps() const { return overlaps_; }
  const Matrix& basis_rho() const { return basis_rho_; }
  const Matrix& basis_sigma() const { return basis_sigma_; }

  double ratio(int x, int y) const { return lambdas_[x] / mus_[y]; }
  double weight_sigma(int x, int y) const {
    return mus_[y] * std::norm(overlaps_(x, y));
  }
  double weight_rho(int x, int y) const {
    return lambdas_[x] * std::norm(overlaps_(x, y));
  }

 private:
  int dim_;
  RealVector lambdas_, mus_;
  Matrix basis_rho_, basis_sigma_;
  Matrix overlaps_;
};

inline ModularSpectrum modular_spectrum(const StatePair& pair) {
  return ModularSpectrum(pair);
}

/// The Hilbert-Schmidt vector obtained by applying the spectral projection
/// of the modular operator onto (0, eps] to sigma^{1/2}:
/// sum over pairs with lambda_x <= eps mu_y (closed boundary, ind_tol band)
/// of mu_y^{1/2} <a_x|b_y> |a_x><b_y|.
Matrix project_omega_sigma(const ModularSpectrum& spec, double eps);

/// Distribution of log of the modular operator in the vector state
/// sigma^{1/2} (reference Sigma) or rho^{1/2} (reference Rho): mass
/// weight at position log(lambda_x / mu_y), coincident positions merged.
AtomicMeasure spectral_distribution(const ModularSpectrum& spec, Reference ref,
                                    double merge_tol = kDefaultMergeTol);

/// Max-entry residual of the defining relation
/// J Delta^{1/2} (X sigma^{1/2}) = X^* rho^{1/2}; an identity, so the
/// returned residual is a numerical smoke test.
double verify_modular_relation(const StatePair& pair, const Matrix& x);

}  // namespace qht

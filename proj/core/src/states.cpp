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

#include "qht/states.hpp"

#include <cmath>
#include <vector>
#include <unsupported/Eigen/KroneckerProduct>

#include "qht/rng.hpp"

namespace qht {

StatePair::StatePair(DensityMatrix r, DensityMatrix s)
    : rho(std::move(r)), sigma(std::move(s)) {
  if (rho.dim() != sigma.dim())
    throw invalid_input("StatePair: dimensions differ");
}

DensityMatrix density_from_matrix(const HermitianMatrix& m, double floor) {
  if (floor <= 0.0) throw invalid_input("density_from_matrix: floor must be positive");
  EigenSystem es = eig_hermitian(m);
  const double tr = es.values.sum();
  if (!std::isfinite(tr) || tr <= 0.0)
    throw invalid_input("density_from_matrix: trace must be positive");

  if (floor * m.dim() >= 0.5)
    throw invalid_input("density_from_matrix: floor too large for dimension");

  // Water-filling: clip eigenvalues below the floor and rescale the rest
  // so the clipped ones sit exactly at the floor and the trace is one.
  bool regularized = false;
  RealVector vals = es.values / tr;
  const int n = es.dim();
  std::vector<bool> clipped(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    int n_clip = 0;
    double free_mass = 0.0;
    for (int k = 0; k < n; ++k) {
      if (!clipped[k] && vals[k] < floor) {
        clipped[k] = true;
        regularized = true;
        changed = true;
      }
      if (clipped[k])
        ++n_clip;
      else
        free_mass += vals[k];
    }
    if (!changed) break;
    const double scale = (1.0 - n_clip * floor) / free_mass;
    for (int k = 0; k < n; ++k) vals[k] = clipped[k] ? floor : vals[k] * scale;
  }
  if (!regularized) vals /= vals.sum();

  Matrix out = es.vectors * vals.asDiagonal() * es.vectors.adjoint();
  out = 0.5 * (out + out.adjoint().eval());
  HermitianMatrix hm(std::move(out));
  EigenSystem hes = eig_hermitian(hm);
  return DensityMatrix(std::move(hm), std::move(hes), regularized);
}

DensityMatrix random_density(int dim, std::uint64_t seed, double floor) {
  if (dim < 1) throw invalid_input("random_density: dim must be >= 1");
  Rng rng(seed);
  const Matrix g = rng.ginibre(dim, dim);
  Matrix w = g * g.adjoint();
  w = 0.5 * (w + w.adjoint().eval());
  return density_from_matrix(HermitianMatrix(std::move(w)), floor);
}

StatePair random_pair(int dim, std::uint64_t seed, double floor) {
  return StatePair(random_density(dim, derive_seed(seed, 0), floor),
                   random_density(dim, derive_seed(seed, 1), floor));
}

StatePair random_commuting_pair(int dim, std::uint64_t seed, double floor) {
  if (dim < 1) throw invalid_input("random_commuting_pair: dim must be >= 1");
  Rng rng(seed);
  const Matrix u = rng.haar_unitary(dim);
  auto spectrum = [&rng, dim]() {
    RealVector p(dim);
    for (int k = 0; k < dim; ++k) p[k] = -std::log(rng.uniform_open());
    p /= p.sum();
    return p;
  };
  const RealVector pr = spectrum();
  const RealVector ps = spectrum();
  auto make = [&](const RealVector& p) {
    Matrix m = u * p.asDiagonal() * u.adjoint();
    m = 0.5 * (m + m.adjoint().eval());
    return density_from_matrix(HermitianMatrix(std::move(m)), floor);
  };
  return StatePair(make(pr), make(ps));
}

DensityMatrix tensor_power(const DensityMatrix& state, int n) {
  if (n < 1) throw invalid_input("tensor_power: n must be >= 1");
  const double total = std::pow(static_cast<double>(state.dim()), n);
  if (total > 4096.0)
    throw resource_error(
        "tensor_power: dim^n exceeds 4096; use the measure-convolution path");
  Matrix acc = state.matrix();
  for (int k = 1; k < n; ++k)
    acc = Eigen::kroneckerProduct(acc, state.matrix()).eval();
  // Floor below the smallest product eigenvalue so the power is not
  // re-regularized (its spectrum must stay the exact n-fold products).
  const double min_eig = state.eig().values[0];
  const double floor = std::max(0.5 * std::pow(min_eig, n), 1e-300);
  return density_from_matrix(HermitianMatrix(std::move(acc)), floor);
}

}  // namespace qht

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

#include <cstdint>

#include "qht/hermitian.hpp"

namespace qht {

inline constexpr double kDefaultFaithfulnessFloor = 1e-10;

/// Trace-one positive-definite Hermitian matrix with a cached
/// eigendecomposition.  All eigenvalues are at least the faithfulness
/// floor; inputs below it are clipped up and renormalized, with the
/// regularization recorded in a flag.
class DensityMatrix {
 public:
  const Matrix& matrix() const { return matrix_.matrix(); }
  const HermitianMatrix& hermitian() const { return matrix_; }
  const EigenSystem& eig() const { return eig_; }
  int dim() const { return matrix_.dim(); }
  bool regularized() const { return regularized_; }

  /// Functional calculus on the cached eigensystem.
  HermitianMatrix apply(const RealFn& f) const { return apply_fn(eig_, f); }

  friend DensityMatrix density_from_matrix(const HermitianMatrix& m,
                                           double floor);

 private:
  DensityMatrix(HermitianMatrix m, EigenSystem es, bool regularized)
      : matrix_(std::move(m)), eig_(std::move(es)), regularized_(regularized) {}

  HermitianMatrix matrix_;
  EigenSystem eig_;
  bool regularized_;
};

struct StatePair {
  DensityMatrix rho;
  DensityMatrix sigma;

  StatePair(DensityMatrix r, DensityMatrix s);
  int dim() const { return rho.dim(); }
  StatePair swapped() const { return StatePair(sigma, rho); }
};

DensityMatrix density_from_matrix(const HermitianMatrix& m,
                                  double floor = kDefaultFaithfulnessFloor);

/// G G^* / tr(G G^*) for a seeded complex Ginibre matrix G, then floored.
DensityMatrix random_density(int dim, std::uint64_t seed,
                             double floor = kDefaultFaithfulnessFloor);

StatePair random_pair(int dim, std::uint64_t seed,
                      double floor = kDefaultFaithfulnessFloor);

/// Two Dirichlet-uniform spectra on a shared Haar-random eigenbasis.
StatePair random_commuting_pair(int dim, std::uint64_t seed,
                                double floor = kDefaultFaithfulnessFloor);

/// n-fold Kronecker power; guarded to dim^n <= 4096 (direct-oracle use
/// only; large n goes through the convolution path).
DensityMatrix tensor_power(const DensityMatrix& state, int n);

}  // namespace qht

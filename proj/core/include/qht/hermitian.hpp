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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <utility>

#include "qht/errors.hpp"

namespace qht {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealFn = std::function<double(double)>;

/// Max-entry norm (largest absolute entry).
double max_abs(const Matrix& m);

/// Boundary band for indicator functions of eigenvalues: v counts as
/// "<= c" when v <= c + ind_tol(c).
inline double ind_tol(double c) { return 1e-12 * (1.0 + std::abs(c)); }
inline bool leq_band(double v, double c) { return v <= c + ind_tol(c); }

inline double default_rank_tol(int dim) { return 1e-10 * dim; }

/// Hermitian matrix, symmetrized at construction.  Construction rejects
/// non-finite entries and inputs whose anti-Hermitian part exceeds 1e-12.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix m);
  const Matrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

 private:
  Matrix m_;
};

/// Eigendecomposition with ascending eigenvalues, orthonormal columns and
/// a fixed phase convention (first nonzero component of each eigenvector
/// is real positive).
struct EigenSystem {
  RealVector values;
  Matrix vectors;
  int dim() const { return static_cast<int>(values.size()); }
};

/// Orthogonal projector; construction validates idempotency within 1e-9.
class Projector {
 public:
  explicit Projector(Matrix p);
  const Matrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  int rank() const;  // trace, rounded

  static Projector zero(int dim) { return Projector(Matrix::Zero(dim, dim)); }
  static Projector identity(int dim) {
    return Projector(Matrix::Identity(dim, dim));
  }

 private:
  Matrix m_;
};

EigenSystem eig_hermitian(const HermitianMatrix& h);

/// Functional calculus: sum of f(eigenvalue) times the rank-one spectral
/// projectors.  Throws domain_error if f is non-finite on the spectrum.
HermitianMatrix apply_fn(const EigenSystem& es, const RealFn& f);
HermitianMatrix apply_fn(const HermitianMatrix& h, const RealFn& f);

/// Left support: orthogonal projector onto the column space of x.
/// Singular values <= rank_tol * max(1, largest singular value) count as
/// zero.  The zero matrix yields the zero projector.
Projector support_projector(const Matrix& x, double rank_tol);

/// H = positive - negative, both PSD, mutually orthogonal.
std::pair<HermitianMatrix, HermitianMatrix> jordan_parts(
    const HermitianMatrix& h);

}  // namespace qht

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

#include "qht/hermitian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qht {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

namespace {

bool all_finite(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const Complex z = m(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  return true;
}

// First component with modulus above tol rescaled to be real positive.
void fix_phases(Matrix& vectors) {
  constexpr double tol = 1e-12;
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      const Complex z = vectors(i, k);
      const double a = std::abs(z);
      if (a > tol) {
        vectors.col(k) *= std::conj(z) / a;
        break;
      }
    }
  }
}

}  // namespace

HermitianMatrix::HermitianMatrix(Matrix m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw invalid_input("HermitianMatrix: matrix must be square, nonempty");
  if (!all_finite(m)) throw invalid_input("HermitianMatrix: non-finite entry");
  const Matrix sym = 0.5 * (m + m.adjoint());
  if (max_abs(m - sym) > 1e-12 * (1.0 + max_abs(m)))
    throw invalid_input("HermitianMatrix: input is not Hermitian within 1e-12");
  m_ = sym;
}

Projector::Projector(Matrix p) {
  const HermitianMatrix h(std::move(p));  // validates finiteness/Hermiticity
  m_ = h.matrix();
  if (max_abs(m_ * m_ - m_) > 1e-9)
    throw invalid_input("Projector: not idempotent within 1e-9");
}

int Projector::rank() const {
  return static_cast<int>(std::lround(m_.trace().real()));
}

EigenSystem eig_hermitian(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success)
    throw invalid_input("eig_hermitian: eigensolver failed to converge");
  EigenSystem es{solver.eigenvalues(), solver.eigenvectors()};
  fix_phases(es.vectors);
  return es;
}

HermitianMatrix apply_fn(const EigenSystem& es, const RealFn& f) {
  const int n = es.dim();
  RealVector fv(n);
  for (int k = 0; k < n; ++k) {
    const double y = f(es.values[k]);
    if (!std::isfinite(y))
      throw domain_error("apply_fn: f is not finite on an eigenvalue");
    fv[k] = y;
  }
  Matrix out = es.vectors * fv.asDiagonal() * es.vectors.adjoint();
  out = 0.5 * (out + out.adjoint().eval());
  return HermitianMatrix(std::move(out));
}

HermitianMatrix apply_fn(const HermitianMatrix& h, const RealFn& f) {
  return apply_fn(eig_hermitian(h), f);
}

Projector support_projector(const Matrix& x, double rank_tol) {
  if (!x.allFinite()) throw invalid_input("support_projector: non-finite input");
  if (rank_tol <= 0.0) throw invalid_input("support_projector: rank_tol must be positive");
  const int n = static_cast<int>(x.rows());
  if (max_abs(x) == 0.0) return Projector::zero(n);

  // Column space from the SVD of x itself: singular values carry only
  // relative rounding noise, so the rank cut at 1e-10 scale is reliable
  // (squaring into x x^* would inflate the noise floor to ~1e-8).
  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeThinU);
  const RealVector& s = svd.singularValues();
  const double cut = rank_tol * std::max(1.0, s[0]);

  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s[k] > cut) p += svd.matrixU().col(k) * svd.matrixU().col(k).adjoint();
  p = 0.5 * (p + p.adjoint().eval());
  return Projector(std::move(p));
}

std::pair<HermitianMatrix, HermitianMatrix> jordan_parts(
    const HermitianMatrix& h) {
  const EigenSystem es = eig_hermitian(h);
  auto pos = apply_fn(es, [](double v) { return v > 0.0 ? v : 0.0; });
  auto neg = apply_fn(es, [](double v) { return v < 0.0 ? -v : 0.0; });
  return {std::move(pos), std::move(neg)};
}

}  // namespace qht

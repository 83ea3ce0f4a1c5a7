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

#include "qht/hypothesis.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

#include "qht/rng.hpp"

namespace qht {

Test keli_test(const StatePair& pair, const ModularSpectrum& spec,
               double eps) {
  const Matrix projected = project_omega_sigma(spec, eps);
  return Test{support_projector(projected, default_rank_tol(pair.dim()))};
}

Test keli_test(const StatePair& pair, double eps) {
  return keli_test(pair, ModularSpectrum(pair), eps);
}

Test keli_test_spanning(const StatePair& pair, double eps) {
  if (eps <= 0.0) throw invalid_input("keli_test_spanning: eps must be positive");
  const int n = pair.dim();
  const EigenSystem& rho_eig = pair.rho.eig();
  const EigenSystem& sigma_eig = pair.sigma.eig();

  Matrix columns = Matrix::Zero(n, n);
  for (int y = 0; y < n; ++y) {
    const double mu = sigma_eig.values[y];
    const Matrix q =
        apply_fn(rho_eig, [&](double v) {
          return leq_band(v, eps * mu) ? 1.0 : 0.0;
        }).matrix();
    columns.col(y) = q * sigma_eig.vectors.col(y);
  }
  return Test{support_projector(columns, default_rank_tol(n))};
}

Test neyman_pearson_test(const StatePair& pair, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw invalid_input("neyman_pearson_test: p must be in (0,1)");
  const double q = 1.0 - p;
  const Matrix diff = p * pair.rho.matrix() - q * pair.sigma.matrix();
  const HermitianMatrix h{Matrix(diff)};
  const EigenSystem es = eig_hermitian(h);
  const double tie_tol = 1e-12 * (1.0 + max_abs(diff));

  const int n = pair.dim();
  Matrix proj = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k)
    if (es.values[k] < -tie_tol)
      proj += es.vectors.col(k) * es.vectors.col(k).adjoint();
  proj = 0.5 * (proj + proj.adjoint().eval());
  return Test{Projector(std::move(proj))};
}

ErrorPair error_pair(const StatePair& pair, const Test& t) {
  if (t.dim() != pair.dim())
    throw invalid_input("error_pair: dimension mismatch");
  const double alpha = (pair.rho.matrix() * t.projector.matrix()).trace().real();
  const double beta =
      1.0 - (pair.sigma.matrix() * t.projector.matrix()).trace().real();
  return {std::clamp(alpha, 0.0, 1.0), std::clamp(beta, 0.0, 1.0)};
}

double bayes_risk(const StatePair& pair, double p, const Test& t) {
  const ErrorPair e = error_pair(pair, t);
  return p * e.alpha + (1.0 - p) * e.beta;
}

Test random_projector_test(int dim, std::uint64_t seed) {
  Rng rng(seed);
  const int rank =
      static_cast<int>(rng.uniform() * (dim + 1));  // uniform in {0..dim}
  if (rank == 0) return Test{Projector::zero(dim)};
  const Matrix g = rng.ginibre(dim, rank);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix q =
      Matrix(qr.householderQ()).leftCols(std::min(rank, dim));
  Matrix proj = q * q.adjoint();
  proj = 0.5 * (proj + proj.adjoint().eval());
  return Test{Projector(std::move(proj))};
}

}  // namespace qht

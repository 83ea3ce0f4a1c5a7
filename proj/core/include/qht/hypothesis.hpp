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

#include "qht/modular.hpp"
#include "qht/states.hpp"

namespace qht {

/// A binary test: an orthogonal projector in the observable algebra.
/// Outcome 1 concludes sigma, outcome 0 concludes rho.
struct Test {
  Projector projector;
  int dim() const { return projector.dim(); }
};

/// alpha: probability of concluding sigma when the state is rho.
/// beta: probability of concluding rho when the state is sigma.
struct ErrorPair {
  double alpha;
  double beta;
};

/// Support of the spectral projection of the modular operator onto
/// (0, eps] applied to sigma^{1/2}.  A vanishing projection yields the
/// zero test (alpha = 0, beta = 1).
Test keli_test(const StatePair& pair, double eps);
Test keli_test(const StatePair& pair, const ModularSpectrum& spec, double eps);

/// Equivalent construction through the spanning vectors: for each sigma
/// eigenvector b_y, xi_y = 1_{[0, eps mu_y]}(rho) b_y; the test projects
/// onto their span.
Test keli_test_spanning(const StatePair& pair, double eps);

/// Bayes-risk minimizer for prior (p, 1-p): the spectral projector of
/// p rho - (1-p) sigma onto its strictly negative part, with eigenvalues
/// inside a tie band of width 1e-12 * (1 + norm) excluded.
Test neyman_pearson_test(const StatePair& pair, double p);

ErrorPair error_pair(const StatePair& pair, const Test& t);

double bayes_risk(const StatePair& pair, double p, const Test& t);

/// Seeded random projector: rank uniform in {0..dim}, column space from a
/// Gaussian matrix.
Test random_projector_test(int dim, std::uint64_t seed);

}  // namespace qht

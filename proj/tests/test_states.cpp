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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qht/rng.hpp"

using namespace qht;

namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("density_from_matrix leaves valid states untouched") {
  const DensityMatrix d = density_from_matrix(HermitianMatrix(diag2(0.7, 0.3)));
  CHECK_FALSE(d.regularized());
  CHECK(max_abs(d.matrix() - diag2(0.7, 0.3)) < 1e-12);

  const DensityMatrix half =
      density_from_matrix(HermitianMatrix(diag2(0.5, 0.5)));
  CHECK_FALSE(half.regularized());
  CHECK(max_abs(half.matrix() - diag2(0.5, 0.5)) < 1e-12);
}

TEST_CASE("density_from_matrix clips rank-deficient states to the floor") {
  const DensityMatrix d =
      density_from_matrix(HermitianMatrix(diag2(1.0, 0.0)), 1e-6);
  CHECK(d.regularized());
  CHECK(d.eig().values[0] >= 1e-6 * (1.0 - 1e-9));
  CHECK(d.matrix().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("density_from_matrix rejects nonpositive trace") {
  CHECK_THROWS_AS(density_from_matrix(HermitianMatrix(diag2(1.0, -1.0))),
                  invalid_input);
}

TEST_CASE("random_density is deterministic and satisfies the contract") {
  const DensityMatrix a = random_density(2, 42, 1e-8);
  const DensityMatrix b = random_density(2, 42, 1e-8);
  CHECK(max_abs(a.matrix() - b.matrix()) == 0.0);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (int dim : {1, 2, 3, 5}) {
      const DensityMatrix d = random_density(dim, derive_seed(7, seed), 1e-8);
      CHECK(d.eig().values[0] >= 1e-8 * (1.0 - 1e-9));
      CHECK(std::abs(d.matrix().trace().real() - 1.0) <= 1e-10);
    }
  }

  const DensityMatrix one = random_density(1, 123, 1e-8);
  CHECK(one.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("random_commuting_pair commutes and is deterministic") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const StatePair p = random_commuting_pair(4, derive_seed(11, seed));
    const Matrix comm = p.rho.matrix() * p.sigma.matrix() -
                        p.sigma.matrix() * p.rho.matrix();
    CHECK(max_abs(comm) <= 1e-10);
  }
  const StatePair a = random_commuting_pair(3, 99);
  const StatePair b = random_commuting_pair(3, 99);
  CHECK(max_abs(a.rho.matrix() - b.rho.matrix()) == 0.0);
  CHECK(max_abs(a.sigma.matrix() - b.sigma.matrix()) == 0.0);

  const StatePair one = random_commuting_pair(1, 5);
  CHECK(one.rho.matrix()(0, 0).real() == doctest::Approx(1.0));
  CHECK(one.sigma.matrix()(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("tensor_power of a diagonal qubit state") {
  const DensityMatrix d = density_from_matrix(HermitianMatrix(diag2(0.7, 0.3)));
  const DensityMatrix sq = tensor_power(d, 2);
  Matrix expected = Matrix::Zero(4, 4);
  expected.diagonal() << 0.49, 0.21, 0.21, 0.09;
  CHECK(max_abs(sq.matrix() - expected) < 1e-12);

  const DensityMatrix same = tensor_power(d, 1);
  CHECK(max_abs(same.matrix() - d.matrix()) < 1e-12);
}

TEST_CASE("tensor_power spectrum is the product multiset") {
  const DensityMatrix d = random_density(2, 77, 1e-8);
  const DensityMatrix cube = tensor_power(d, 3);
  std::vector<double> expected;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        expected.push_back(d.eig().values[i] * d.eig().values[j] *
                           d.eig().values[k]);
  std::sort(expected.begin(), expected.end());
  for (int k = 0; k < 8; ++k)
    CHECK(std::abs(cube.eig().values[k] - expected[k]) <= 1e-9);
  CHECK(std::abs(cube.matrix().trace().real() - 1.0) <= 1e-9);
}

TEST_CASE("tensor_power enforces the size guard") {
  const DensityMatrix d = random_density(2, 5, 1e-8);
  CHECK_THROWS_AS(tensor_power(d, 13), resource_error);
}

TEST_CASE("state pairs require matching dimensions") {
  CHECK_THROWS_AS(StatePair(random_density(2, 1), random_density(3, 2)),
                  invalid_input);
}

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

#include <doctest.h>

#include <cmath>

#include "qht/bounds.hpp"
#include "qht/rng.hpp"

using namespace qht;

namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

StatePair e1() {
  return StatePair(density_from_matrix(HermitianMatrix(diag2(0.7, 0.3))),
                   density_from_matrix(HermitianMatrix(diag2(0.4, 0.6))));
}

bool eps_on_boundary(const ModularSpectrum& spec, double eps) {
  for (int x = 0; x < spec.dim(); ++x)
    for (int y = 0; y < spec.dim(); ++y)
      if (std::abs(eps - spec.ratio(x, y)) <=
          1e-9 * std::max(1.0, spec.ratio(x, y)))
        return true;
  return false;
}

}  // namespace

TEST_CASE("keli_test closed forms on the fixture") {
  const StatePair pair = e1();
  CHECK(max_abs(keli_test(pair, 0.6).projector.matrix() - diag2(0, 1)) < 1e-10);
  CHECK(max_abs(keli_test(pair, 0.4).projector.matrix()) < 1e-12);
  // eps equal to the largest ratio: the closed boundary includes it.
  CHECK(max_abs(keli_test(pair, 1.75).projector.matrix() -
                Matrix::Identity(2, 2)) < 1e-10);
}

TEST_CASE("spanning-vector route matches on the fixture") {
  const StatePair pair = e1();
  CHECK(max_abs(keli_test_spanning(pair, 0.6).projector.matrix() -
                diag2(0, 1)) < 1e-10);
  CHECK(max_abs(keli_test_spanning(pair, 0.4).projector.matrix()) < 1e-12);
}

TEST_CASE("identical states give the identity test for eps >= 1") {
  const DensityMatrix d = random_density(3, 13);
  const StatePair pair(d, d);
  CHECK(max_abs(keli_test_spanning(pair, 1.0).projector.matrix() -
                Matrix::Identity(3, 3)) < 1e-10);
  CHECK(max_abs(keli_test(pair, 1.0).projector.matrix() -
                Matrix::Identity(3, 3)) < 1e-10);
}

TEST_CASE("neyman_pearson_test closed forms and tie convention") {
  const StatePair pair = e1();
  CHECK(max_abs(neyman_pearson_test(pair, 0.5).projector.matrix() -
                diag2(0, 1)) < 1e-12);
  CHECK(max_abs(neyman_pearson_test(pair, 0.625).projector.matrix() -
                diag2(0, 1)) < 1e-12);

  const DensityMatrix d = random_density(2, 21);
  const StatePair same(d, d);
  // p rho - q sigma vanishes: everything is a tie, excluded by convention.
  CHECK(max_abs(neyman_pearson_test(same, 0.5).projector.matrix()) == 0.0);
}

TEST_CASE("error probabilities and Bayes risk on the fixture") {
  const StatePair pair = e1();
  const Test t{Projector(diag2(0, 1))};
  const ErrorPair e = error_pair(pair, t);
  CHECK(e.alpha == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(e.beta == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(bayes_risk(pair, 0.5, t) == doctest::Approx(0.35).epsilon(1e-12));

  const Test zero{Projector::zero(2)};
  const ErrorPair ez = error_pair(pair, zero);
  CHECK(ez.alpha == 0.0);
  CHECK(ez.beta == 1.0);
  CHECK(bayes_risk(pair, 0.3, zero) == doctest::Approx(0.7));

  const Test id{Projector::identity(2)};
  const ErrorPair ei = error_pair(pair, id);
  CHECK(ei.alpha == 1.0);
  CHECK(ei.beta == 0.0);
  CHECK(bayes_risk(pair, 0.3, id) == doctest::Approx(0.3));
}

TEST_CASE("error_pair rejects dimension mismatch") {
  CHECK_THROWS_AS(error_pair(e1(), Test{Projector::zero(3)}), invalid_input);
}

TEST_CASE("route equivalence and theorem bounds on random pairs") {
  for (int dim = 2; dim <= 6; ++dim) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const StatePair pair = random_pair(dim, derive_seed(100 + dim, seed));
      const ModularSpectrum spec(pair);
      for (double eps : {0.05, 0.3, 1.0, 2.5}) {
        const Test t_kl = keli_test(pair, spec, eps);
        const ErrorPair err = error_pair(pair, t_kl);
        CHECK(err.alpha <= eps + 1e-10);
        CHECK(err.beta <= keli_beta_bound(spec, eps) + 1e-10);
        if (!eps_on_boundary(spec, eps)) {
          const Test t_span = keli_test_spanning(pair, eps);
          CHECK(max_abs(t_kl.projector.matrix() -
                        t_span.projector.matrix()) <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("NP risk equals the closed form and beats random projectors") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const StatePair pair = random_pair(3, derive_seed(200, seed));
    for (double p : {0.25, 0.5, 0.8}) {
      const double min_risk = min_bayes_risk_closed_form(pair, p);
      CHECK(std::abs(bayes_risk(pair, p, neyman_pearson_test(pair, p)) -
                     min_risk) <= 1e-10);
      for (int k = 0; k < 100; ++k) {
        const Test t = random_projector_test(3, derive_seed(seed, k));
        CHECK(min_risk <= bayes_risk(pair, p, t) + 1e-10);
      }
    }
  }
}

TEST_CASE("commuting pairs: Ke Li test equals Neyman-Pearson off boundary") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const StatePair pair = random_commuting_pair(4, derive_seed(300, seed));
    const ModularSpectrum spec(pair);
    for (double eps : {0.2, 0.7, 1.3, 3.0}) {
      if (eps_on_boundary(spec, eps)) continue;
      const Test t_kl = keli_test(pair, spec, eps);
      const Test t_np = neyman_pearson_test(pair, 1.0 / (1.0 + eps));
      CHECK(max_abs(t_kl.projector.matrix() - t_np.projector.matrix()) <=
            1e-8);
      CHECK(std::abs(error_pair(pair, t_kl).beta -
                     keli_beta_bound(spec, eps)) <= 1e-10);
    }
  }
}

TEST_CASE("tie-band projectors do not change the risk") {
  const DensityMatrix d = random_density(3, 44);
  const StatePair same(d, d);
  const double p = 0.5;
  const Test t_np = neyman_pearson_test(same, p);
  // All of p rho - q sigma is tie; adding any projector commuting with it
  // (here: a spectral projector of rho) moves the risk by at most dim*tol.
  const Matrix v = d.eig().vectors.col(0) * d.eig().vectors.col(0).adjoint();
  const Test t_aug{Projector(t_np.projector.matrix() + v)};
  const double tie_tol = 1e-12 * (1.0 + max_abs(0.5 * d.matrix() * 0.0));
  CHECK(std::abs(bayes_risk(same, p, t_aug) - bayes_risk(same, p, t_np)) <=
        3 * std::max(tie_tol, 1e-12));
}

TEST_CASE("random projector tests are valid projectors of bounded rank") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Test t = random_projector_test(4, derive_seed(400, seed));
    CHECK(t.projector.rank() >= 0);
    CHECK(t.projector.rank() <= 4);
  }
}

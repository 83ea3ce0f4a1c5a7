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

#include "qht/asymptotics.hpp"

#include <doctest.h>

#include <cmath>

#include "qht/modular.hpp"
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

AtomicMeasure nu_sigma_e1() {
  return spectral_distribution(ModularSpectrum(e1()), Reference::Sigma);
}

}  // namespace

TEST_CASE("convolving with a point mass at zero is the identity") {
  const AtomicMeasure m({{-1.0, 0.25}, {2.0, 0.7}}, 1.0, 0.05);
  const AtomicMeasure out = convolve(AtomicMeasure::dirac(0.0), m);
  REQUIRE(out.size() == 2);
  CHECK(out.atoms()[0].position == doctest::Approx(-1.0));
  CHECK(out.atoms()[0].mass == doctest::Approx(0.25));
  CHECK(out.atoms()[1].mass == doctest::Approx(0.7));
  CHECK(out.defect() == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(out.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-fold convolution of the fixture sigma distribution") {
  const AtomicMeasure sq = convolve(nu_sigma_e1(), nu_sigma_e1());
  REQUIRE(sq.size() == 3);
  CHECK(sq.atoms()[0].position == doctest::Approx(2 * std::log(0.5)));
  CHECK(sq.atoms()[0].mass == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(sq.atoms()[1].position == doctest::Approx(std::log(0.875)));
  CHECK(sq.atoms()[1].mass == doctest::Approx(0.48).epsilon(1e-12));
  CHECK(sq.atoms()[2].position == doctest::Approx(2 * std::log(1.75)));
  CHECK(sq.atoms()[2].mass == doctest::Approx(0.16).epsilon(1e-12));
}

TEST_CASE("convolution adds means and variances") {
  const AtomicMeasure a({{-0.3, 0.5}, {0.4, 0.2}, {1.1, 0.3}});
  const AtomicMeasure b({{0.2, 0.6}, {2.0, 0.4}});
  const AtomicMeasure c = convolve(a, b);
  CHECK(c.mean() == doctest::Approx(a.mean() + b.mean()).epsilon(1e-12));
  CHECK(c.variance() ==
        doctest::Approx(a.variance() + b.variance()).epsilon(1e-12));
  CHECK(c.mass() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("convolve_power moments scale linearly") {
  const AtomicMeasure base = nu_sigma_e1();
  const AtomicMeasure one = convolve_power(base, 1);
  REQUIRE(one.size() == base.size());
  CHECK(one.mean() == doctest::Approx(base.mean()).epsilon(1e-12));

  const AtomicMeasure two = convolve_power(base, 2);
  CHECK(two.size() == 3);
  CHECK(two.mean() == doctest::Approx(2 * base.mean()).epsilon(1e-12));

  const AtomicMeasure ten = convolve_power(base, 10);
  CHECK(ten.size() == 11);
  CHECK(ten.mass() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ten.mean() == doctest::Approx(10 * base.mean()).epsilon(1e-10));
  CHECK(ten.variance() == doctest::Approx(10 * base.variance()).epsilon(1e-9));
}

TEST_CASE("convolve_power enforces the atom budget") {
  std::vector<Atom> atoms;
  for (int k = 0; k < 200; ++k)
    atoms.push_back({std::sqrt(2.0) * k + 0.1 * k * k, 1.0 / 200});
  const AtomicMeasure wide(atoms);
  CHECK_THROWS_AS(convolve_power(wide, 4, kDefaultMergeTol, 0.0, 10'000),
                  resource_error);
}

TEST_CASE("pruning moves mass into the defect, never loses it") {
  const AtomicMeasure a({{0.0, 1.0 - 1e-9}, {5.0, 1e-9}});
  const AtomicMeasure b({{0.0, 0.5}, {1.0, 0.5}});
  const AtomicMeasure c = convolve(a, b, kDefaultMergeTol, 1e-8);
  CHECK(c.defect() > 0.0);
  CHECK(c.mass() + c.defect() == doctest::Approx(c.total()).epsilon(1e-12));
  for (const Atom& atom : c.atoms()) CHECK(atom.mass >= 1e-8);
}

TEST_CASE("tail_mass band and strictness semantics") {
  const AtomicMeasure nu = nu_sigma_e1();
  // Threshold between the two atoms: both readings agree.
  const TailInterval mid = tail_mass(nu, std::log(0.6), true);
  CHECK(mid.lower == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(mid.upper == doctest::Approx(0.4).epsilon(1e-12));

  // Threshold exactly on an atom: strict excludes it from the lower end
  // but keeps it in the upper end; non-strict keeps it in both.
  const TailInterval strict = tail_mass(nu, std::log(1.75), true);
  CHECK(strict.lower == doctest::Approx(0.0));
  CHECK(strict.upper == doctest::Approx(0.4).epsilon(1e-12));
  const TailInterval closed = tail_mass(nu, std::log(1.75), false);
  CHECK(closed.lower == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(closed.upper == doctest::Approx(0.4).epsilon(1e-12));

  // Defect widens the upper end only.
  const AtomicMeasure with_defect({{0.0, 0.9}}, 1.0, 0.1);
  const TailInterval t = tail_mass(with_defect, -1.0, true);
  CHECK(t.lower == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(t.upper == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("iid bound on the fixture and degenerate cases") {
  const StatePair pair = e1();
  const TailInterval two = iid_keli_beta_bound(pair, 0.8, 2);
  // Tail above log 0.8 of the two-fold convolution: the atoms at
  // log 0.875 (mass 0.48) and 2 log 1.75 (mass 0.16) both count.
  CHECK(two.lower == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(two.upper == doctest::Approx(0.64).epsilon(1e-12));

  const TailInterval one = iid_keli_beta_bound(pair, 0.6, 1);
  CHECK(one.midpoint() ==
        doctest::Approx(keli_beta_bound(pair, 0.6)).epsilon(1e-12));

  const DensityMatrix d = random_density(2, 31);
  const TailInterval same = iid_keli_beta_bound(StatePair(d, d), 0.5, 3);
  CHECK(same.lower == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(same.upper == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("iid bound matches the explicit tensor-power oracle") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const StatePair pair = random_pair(2, derive_seed(900, seed));
    for (int n : {1, 2, 3}) {
      for (double eps : {0.25, 0.8, 2.0}) {
        const TailInterval iid = iid_keli_beta_bound(pair, eps, n);
        const double direct = tensor_beta_bound_direct(pair, eps, n);
        CHECK(iid.width() <= 1e-9);
        CHECK(direct >= iid.lower - 1e-9);
        CHECK(direct <= iid.upper + 1e-9);
      }
    }
  }
}

TEST_CASE("iid bound conserves mass for large n under pruning") {
  const StatePair pair = random_pair(2, 2718);
  const AtomicMeasure base =
      spectral_distribution(ModularSpectrum(pair), Reference::Sigma);
  const AtomicMeasure big = convolve_power(base, 50, 1e-12, 1e-18);
  CHECK(big.mass() + big.defect() ==
        doctest::Approx(big.total()).epsilon(1e-9));
  CHECK(big.defect() <= 1e-9);
}

TEST_CASE("stein base measure has mean -D and variance V") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const StatePair pair = random_pair(3, derive_seed(1000, seed));
    const AtomicMeasure base = stein_base_measure(pair);
    const DivergenceReport rep = divergences(pair);
    CHECK(base.mean() == doctest::Approx(-rep.D).epsilon(1e-9));
    CHECK(base.variance() == doctest::Approx(rep.V).epsilon(1e-9));
  }
}

TEST_CASE("stein experiment: eps = 0.5 pins the first-order rate") {
  const StatePair pair = e1();
  const double d = relative_entropy(pair);
  const auto rows = stein_experiment(pair, 0.5, {10, 20});
  REQUIRE(rows.size() == 2);
  for (const SteinRow& row : rows) {
    CHECK(row.log_eps_n == doctest::Approx(-row.n * d).epsilon(1e-10));
    CHECK(row.minus_log_beta == row.predicted);
    CHECK(row.alpha_tail.lower >= 0.0);
    CHECK(row.alpha_tail.upper <= 1.0 + 1e-12);
  }
}

TEST_CASE("stein experiment alpha converges to eps") {
  const StatePair pair = e1();
  const DivergenceReport rep = divergences(pair);
  const AtomicMeasure base = stein_base_measure(pair);
  const double rho3 = base.abs_central_moment(3);
  const double budget_scale = 1.2 * rho3 / std::pow(rep.V, 1.5);
  for (double eps : {0.05, 0.3}) {
    const auto rows = stein_experiment(pair, eps, {100, 400});
    for (const SteinRow& row : rows) {
      const double budget = budget_scale / std::sqrt(row.n);
      CHECK(std::abs(row.alpha_tail.midpoint() - eps) <= budget);
      CHECK(row.alpha_tail.width() <= 1e-9);
    }
  }
}

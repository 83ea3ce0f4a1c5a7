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

#include "qht/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <json.hpp>

#include "qht/asymptotics.hpp"
#include "qht/bounds.hpp"
#include "qht/hypothesis.hpp"
#include "qht/modular.hpp"
#include "qht/rng.hpp"

namespace qht {

void VerifyReport::record(const std::string& name, double slack, double tol,
                          const std::string& context) {
  auto [it, inserted] = max_slacks.try_emplace(name, slack);
  if (!inserted && slack > it->second) it->second = slack;
  if (slack > tol)
    failures.push_back(name + " slack " + std::to_string(slack) + " > tol " +
                       std::to_string(tol) + " at " + context);
}

namespace {

bool eps_on_ratio_boundary(const ModularSpectrum& spec, double eps) {
  for (int x = 0; x < spec.dim(); ++x)
    for (int y = 0; y < spec.dim(); ++y) {
      const double r = spec.ratio(x, y);
      if (std::abs(eps - r) <= 1e-9 * std::max(1.0, r)) return true;
    }
  return false;
}

void check_pair(const StatePair& pair, bool commuting,
                const VerifyConfig& config, std::uint64_t pair_seed,
                const std::string& ctx, VerifyReport& report) {
  const ModularSpectrum spec(pair);

  // Theorem bounds, route equivalence, bound comparisons per eps.
  for (double eps : config.eps_grid) {
    const Test t_kl = keli_test(pair, spec, eps);
    const ErrorPair err = error_pair(pair, t_kl);
    const double bound = keli_beta_bound(spec, eps);
    const std::string ectx = ctx + " eps=" + std::to_string(eps);

    report.record("theorem1_alpha", err.alpha - eps, 1e-10, ectx);
    report.record("theorem1_beta", err.beta - bound, 1e-10, ectx);
    report.record("keli_bound_range", std::max(-bound, bound - 1.0), 1e-12, ectx);

    if (!eps_on_ratio_boundary(spec, eps)) {
      const Test t_span = keli_test_spanning(pair, eps);
      report.record(
          "route_equivalence",
          max_abs(t_kl.projector.matrix() - t_span.projector.matrix()), 1e-8,
          ectx);

      // Tail mass above log(eps) must match 1 - |P(Omega_sigma)|_HS^2.
      const Matrix projected = project_omega_sigma(spec, eps);
      const double complement = 1.0 - projected.squaredNorm();
      report.record("tail_vs_projection", std::abs(bound - complement), 1e-10,
                    ectx);

      if (commuting) {
        const Test t_np = neyman_pearson_test(pair, 1.0 / (1.0 + eps));
        report.record(
            "commuting_kl_np",
            max_abs(t_kl.projector.matrix() - t_np.projector.matrix()), 1e-8,
            ectx);
        report.record("commuting_tightness", std::abs(err.beta - bound), 1e-10,
                      ectx);
      }
    }

    // Markov's exponential inequality dominates the tail bound.
    for (int i = 1; i <= 10; ++i) {
      const double s = 0.1 * i;
      const double markov = std::pow(eps, -s) * quasi_entropy(pair, s);
      report.record("markov_dominance", bound - markov, 1e-10,
                    ectx + " s=" + std::to_string(s));
    }

    // Chernoff sandwich at p = 1/(1+eps).
    const double p = 1.0 / (1.0 + eps);
    const double min_risk = min_bayes_risk_closed_form(pair, p);
    const Test t_np = neyman_pearson_test(pair, p);
    const double np_risk = bayes_risk(pair, p, t_np);
    const ChernoffResult chernoff = chernoff_bound(pair, p);
    report.record("np_equals_min_risk", std::abs(np_risk - min_risk), 1e-10,
                  ectx);
    report.record("chernoff_sandwich", np_risk - chernoff.value, 1e-10, ectx);
  }

  // Monotone tail bound over the sorted eps grid.
  {
    std::vector<double> grid = config.eps_grid;
    std::sort(grid.begin(), grid.end());
    double prev = keli_beta_bound(spec, grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double cur = keli_beta_bound(spec, grid[i]);
      report.record("bound_monotone", cur - prev, 1e-12,
                    ctx + " eps=" + std::to_string(grid[i]));
      prev = cur;
    }
  }

  // NP optimality against random projector tests at p = 1/2.
  {
    const double p = 0.5;
    const double min_risk = min_bayes_risk_closed_form(pair, p);
    for (int k = 0; k < config.random_projectors; ++k) {
      const Test t = random_projector_test(pair.dim(),
                                           derive_seed(pair_seed, 1000 + k));
      report.record("np_optimality", min_risk - bayes_risk(pair, p, t), 1e-10,
                    ctx + " projector=" + std::to_string(k));
    }
  }

  // Tie insensitivity: adding the tie-band eigenprojector of
  // p rho - q sigma changes the risk by at most dim * tie_tol.
  {
    const double p = 0.5;
    const Matrix diff = p * pair.rho.matrix() - (1 - p) * pair.sigma.matrix();
    const double tie_tol = 1e-12 * (1.0 + max_abs(diff));
    const EigenSystem es = eig_hermitian(HermitianMatrix{Matrix(diff)});
    Matrix tie = Matrix::Zero(pair.dim(), pair.dim());
    for (int k = 0; k < pair.dim(); ++k)
      if (std::abs(es.values[k]) <= tie_tol)
        tie += es.vectors.col(k) * es.vectors.col(k).adjoint();
    if (max_abs(tie) > 0.0) {
      const Test t_np = neyman_pearson_test(pair, p);
      const Test t_aug{Projector(t_np.projector.matrix() + tie)};
      const double delta =
          std::abs(bayes_risk(pair, p, t_aug) - bayes_risk(pair, p, t_np));
      report.record("tie_insensitivity", delta - pair.dim() * tie_tol, 1e-12,
                    ctx);
    }
  }

  // Divergences: nonnegativity and agreement with the spectral measure.
  {
    const DivergenceReport div = divergences(pair);
    const AtomicMeasure nu = spectral_distribution(spec, Reference::Rho);
    report.record("relative_entropy_nonneg", -div.D, 1e-10, ctx);
    report.record("divergence_vs_measure_mean", std::abs(div.D - nu.mean()),
                  1e-9, ctx);
    report.record("divergence_vs_measure_var",
                  std::abs(div.V - nu.variance()), 1e-9, ctx);
  }

  // Quasi-entropy: direct trace vs modular-spectrum route.
  for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    long double via_spec = 0.0L;
    for (int x = 0; x < spec.dim(); ++x)
      for (int y = 0; y < spec.dim(); ++y)
        via_spec += spec.weight_sigma(x, y) * std::pow(spec.ratio(x, y), s);
    report.record("quasi_entropy_routes",
                  std::abs(quasi_entropy(pair, s) -
                           static_cast<double>(via_spec)),
                  1e-9, ctx + " s=" + std::to_string(s));
  }

  // Defining relation of the modular conjugation on a random observable.
  {
    Rng rng(derive_seed(pair_seed, 99));
    const Matrix x = rng.ginibre(pair.dim(), pair.dim());
    report.record("modular_relation",
                  verify_modular_relation(pair, x) - 1e-8 * (1.0 + max_abs(x)),
                  0.0, ctx);
  }
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& config) {
  if (config.trials < 1) throw invalid_input("run_verify: trials must be >= 1");
  if (config.eps_grid.empty())
    throw invalid_input("run_verify: eps grid must be nonempty");
  for (double eps : config.eps_grid)
    if (eps <= 0.0) throw invalid_input("run_verify: eps grid must be positive");

  VerifyReport report;
  for (int trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t generic_seed = derive_seed(config.seed, 2 * trial);
    const std::uint64_t comm_seed = derive_seed(config.seed, 2 * trial + 1);
    const StatePair generic = random_pair(config.dim, generic_seed);
    const StatePair commuting = random_commuting_pair(config.dim, comm_seed);

    check_pair(generic, false, config, generic_seed,
               "trial=" + std::to_string(trial) + " kind=generic", report);
    check_pair(commuting, true, config, comm_seed,
               "trial=" + std::to_string(trial) + " kind=commuting", report);
    report.instances += 2;
  }
  return report;
}

VerifyReport run_oracle(const OracleConfig& config) {
  if (config.pairs < 1) throw invalid_input("run_oracle: pairs must be >= 1");
  VerifyReport report;
  for (int k = 0; k < config.pairs; ++k) {
    const StatePair pair = random_pair(2, derive_seed(config.seed, k), 1e-8);
    for (int n : config.n_list)
      for (double eps : config.eps_list) {
        const TailInterval conv = iid_keli_beta_bound(pair, eps, n);
        const double direct = tensor_beta_bound_direct(pair, eps, n);
        const std::string ctx = "pair=" + std::to_string(k) +
                                " n=" + std::to_string(n) +
                                " eps=" + std::to_string(eps);
        report.record("oracle_interval_width", conv.width(), config.tol, ctx);
        report.record("oracle_contains_direct",
                      std::max(conv.lower - direct, direct - conv.upper),
                      config.tol, ctx);
        report.instances += 1;
      }
  }
  return report;
}

std::string report_to_json(const VerifyReport& report, bool with_timestamp) {
  nlohmann::json j;
  j["instances"] = report.instances;
  j["failures"] = report.failures;
  j["max_slacks"] = report.max_slacks;
  if (with_timestamp) j["timestamp"] = std::time(nullptr);
  return j.dump(2);
}

}  // namespace qht

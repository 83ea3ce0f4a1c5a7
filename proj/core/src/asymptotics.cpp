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

#include <cmath>

#include "qht/modular.hpp"

namespace qht {

AtomicMeasure convolve(const AtomicMeasure& a, const AtomicMeasure& b,
                       double merge_tol, double prune_tol) {
  std::vector<Atom> sums;
  sums.reserve(a.size() * b.size());
  long double pruned = 0.0L;
  for (const Atom& x : a.atoms())
    for (const Atom& y : b.atoms()) {
      const double mass = x.mass * y.mass;
      if (mass < prune_tol)
        pruned += mass;
      else
        sums.push_back({x.position + y.position, mass});
    }
  const double defect = a.defect() * b.total() + b.defect() * a.total() +
                        static_cast<double>(pruned);
  return AtomicMeasure(std::move(sums), a.total() * b.total(), defect,
                       merge_tol);
}

AtomicMeasure convolve_power(const AtomicMeasure& m, int n, double merge_tol,
                             double prune_tol, std::size_t atom_budget) {
  if (n < 1) throw invalid_input("convolve_power: n must be >= 1");
  AtomicMeasure result = AtomicMeasure::dirac(0.0);
  AtomicMeasure base = m;
  int k = n;
  bool result_is_unit = true;
  while (k > 0) {
    if ((k & 1) != 0) {
      if (result.size() * base.size() > atom_budget)
        throw resource_error(
            "convolve_power: atom budget exceeded; increase prune_tol");
      result = result_is_unit ? base : convolve(result, base, merge_tol, prune_tol);
      result_is_unit = false;
    }
    k >>= 1;
    if (k > 0) {
      if (base.size() * base.size() > atom_budget)
        throw resource_error(
            "convolve_power: atom budget exceeded; increase prune_tol");
      base = convolve(base, base, merge_tol, prune_tol);
    }
  }
  return result;
}

TailInterval tail_mass(const AtomicMeasure& m, double threshold, bool strict,
                       double band_tol) {
  long double lower = 0.0L, band = 0.0L;
  for (const Atom& a : m.atoms()) {
    if (std::abs(a.position - threshold) <= band_tol) {
      band += a.mass;
      if (!strict) lower += a.mass;
    } else if (a.position > threshold) {
      lower += a.mass;
    }
  }
  double lo = static_cast<double>(lower);
  double hi = static_cast<double>(strict ? lower + band : lower) + m.defect();
  return {lo, hi};
}

TailInterval iid_keli_beta_bound(const StatePair& pair, double eps, int n,
                                 double merge_tol, double prune_tol) {
  if (eps <= 0.0) throw invalid_input("iid_keli_beta_bound: eps must be positive");
  const AtomicMeasure nu =
      spectral_distribution(ModularSpectrum(pair), Reference::Sigma, merge_tol);
  const AtomicMeasure conv = convolve_power(nu, n, merge_tol, prune_tol);
  return tail_mass(conv, std::log(eps), /*strict=*/true, merge_tol);
}

double tensor_beta_bound_direct(const StatePair& pair, double eps, int n) {
  const StatePair powered(tensor_power(pair.rho, n), tensor_power(pair.sigma, n));
  return keli_beta_bound(powered, eps);
}

AtomicMeasure stein_base_measure(const StatePair& pair, double merge_tol) {
  const ModularSpectrum spec(pair);
  const int n = spec.dim();
  std::vector<Atom> atoms;
  atoms.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const double w = spec.weight_rho(x, y);
      if (w == 0.0) continue;
      atoms.push_back({-std::log(spec.ratio(x, y)), w});
    }
  return AtomicMeasure(std::move(atoms), 1.0, 0.0, merge_tol);
}

std::vector<SteinRow> stein_experiment(const StatePair& pair, double eps,
                                       const std::vector<int>& n_list,
                                       double merge_tol, double prune_tol) {
  if (!(eps > 0.0 && eps < 1.0))
    throw invalid_input("stein_experiment: eps must be in (0,1)");
  const DivergenceReport div = divergences(pair);
  const AtomicMeasure base = stein_base_measure(pair, merge_tol);

  std::vector<SteinRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    if (n < 1) throw invalid_input("stein_experiment: n must be >= 1");
    const double predicted = second_order_prediction(div.D, div.V, eps, n);
    const double log_eps_n = -predicted;
    const AtomicMeasure conv = convolve_power(base, n, merge_tol, prune_tol);
    const TailInterval alpha =
        tail_mass(conv, log_eps_n, /*strict=*/true, merge_tol);
    rows.push_back({n, log_eps_n, alpha, -log_eps_n, predicted});
  }
  return rows;
}

}  // namespace qht
